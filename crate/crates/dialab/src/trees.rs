//! Planar binary trees and their names.
//!
//! A tree of degree `n` has `n` internal vertices and `n + 1` leaves,
//! numbered `0..=n` from left to right. Vertex `i` (1-based) sits between
//! leaves `i - 1` and `i`. The name of `y1 ∨ y2` is `[name(y1), p+q+1, name(y2)]`
//! with the names of leaves deleted, so entry `i` of a name is the size of
//! the subtree hanging from vertex `i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Arc<Node>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Node {
    pub left: Tree,
    pub right: Tree,
    degree: usize,
}

/// The two values of the product symbol `∘_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductSymbol {
    /// `⊣`
    LeftPointer,
    /// `⊢`
    RightPointer,
}

impl fmt::Display for ProductSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductSymbol::LeftPointer => "⊣",
            ProductSymbol::RightPointer => "⊢",
        })
    }
}

/// How `expand` adds a leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpandMode {
    Bifurcate,
    ParallelLast,
}

/// A sub-tree spanning the consecutive leaves `start..=start+len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nested {
    pub start: usize,
    pub len: usize,
    pub inner: Tree,
    pub quotient: Tree,
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::Leaf
    }

    /// The tree `[1]`.
    pub fn corolla() -> Tree {
        Tree::graft(Tree::Leaf, Tree::Leaf)
    }

    pub fn graft(left: Tree, right: Tree) -> Tree {
        let degree = left.degree() + right.degree() + 1;
        Tree::Node(Arc::new(Node { left, right, degree }))
    }

    pub fn split(&self) -> Result<(Tree, Tree)> {
        match self {
            Tree::Leaf => Err(Error::SplitOfLeaf),
            Tree::Node(n) => Ok((n.left.clone(), n.right.clone())),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(n) => n.degree,
        }
    }

    pub fn name(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree());
        self.push_name(&mut out);
        out
    }

    fn push_name(&self, out: &mut Vec<usize>) {
        if let Tree::Node(n) = self {
            n.left.push_name(out);
            out.push(n.degree);
            n.right.push_name(out);
        }
    }

    /// Decodes a name, checking the unique-maximum criterion recursively.
    pub fn from_name(name: &[usize]) -> Result<Tree> {
        if name == [0] {
            return Ok(Tree::Leaf);
        }
        Self::decode(name).ok_or_else(|| Error::InvalidName(fmt_seq(name)))
    }

    fn decode(name: &[usize]) -> Option<Tree> {
        if name.is_empty() {
            return Some(Tree::Leaf);
        }
        let n = name.len();
        let mut top = name.iter().enumerate().filter(|(_, &a)| a == n);
        let (p, _) = top.next()?;
        if top.next().is_some() || name.iter().any(|&a| a == 0 || a > n) {
            return None;
        }
        Some(Tree::graft(Self::decode(&name[..p])?, Self::decode(&name[p + 1..])?))
    }

    /// Builds the tree whose root sits at the largest entry, recursively on
    /// both sides. Applied to a permutation this is `ψ`; applied to a
    /// consecutive block of a name it renormalizes the block.
    ///
    /// Panics if some block has a repeated maximum.
    pub fn from_sequence(seq: &[usize]) -> Tree {
        if seq.is_empty() {
            return Tree::Leaf;
        }
        let m = *seq.iter().max().unwrap();
        let p = seq.iter().position(|&a| a == m).unwrap();
        assert!(
            !seq[p + 1..].contains(&m),
            "block {seq:?} has a repeated maximum"
        );
        Tree::graft(Self::from_sequence(&seq[..p]), Self::from_sequence(&seq[p + 1..]))
    }

    /// All trees of degree `n`, ordered lexicographically by name.
    pub fn enumerate(n: usize) -> Vec<Tree> {
        let mut out = Vec::new();
        Self::enumerate_into(n, &mut out);
        out.sort();
        out
    }

    fn enumerate_into(n: usize, out: &mut Vec<Tree>) {
        if n == 0 {
            out.push(Tree::Leaf);
            return;
        }
        for p in 0..n {
            let mut ls = Vec::new();
            let mut rs = Vec::new();
            Self::enumerate_into(p, &mut ls);
            Self::enumerate_into(n - 1 - p, &mut rs);
            for l in &ls {
                for r in &rs {
                    out.push(Tree::graft(l.clone(), r.clone()));
                }
            }
        }
    }

    /// Deletes leaf `i`, for `0 <= i <= degree`.
    pub fn face(&self, i: usize) -> Result<Tree> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::FaceOfLeaf);
        }
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(self.face_unchecked(i))
    }

    fn face_unchecked(&self, i: usize) -> Tree {
        let Tree::Node(node) = self else { unreachable!() };
        let p = node.left.degree();
        if i <= p {
            if node.left.is_leaf() {
                node.right.clone()
            } else {
                Tree::graft(node.left.face_unchecked(i), node.right.clone())
            }
        } else if node.right.is_leaf() {
            node.left.clone()
        } else {
            Tree::graft(node.left.clone(), node.right.face_unchecked(i - p - 1))
        }
    }

    /// Replaces leaf `i` by the corolla `[1]`.
    pub fn bifurcate(&self, i: usize) -> Result<Tree> {
        let n = self.degree();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(self.bifurcate_unchecked(i))
    }

    fn bifurcate_unchecked(&self, i: usize) -> Tree {
        match self {
            Tree::Leaf => Tree::corolla(),
            Tree::Node(node) => {
                let p = node.left.degree();
                if i <= p {
                    Tree::graft(node.left.bifurcate_unchecked(i), node.right.clone())
                } else {
                    Tree::graft(node.left.clone(), node.right.bifurcate_unchecked(i - p - 1))
                }
            }
        }
    }

    /// Adds a new leaf just left of the last one and parallel to it: the
    /// lowest vertex `L ∨ |` of the right spine becomes `(L ∨ |) ∨ |`.
    pub fn parallel_last(&self) -> Result<Tree> {
        match self {
            Tree::Leaf => Err(Error::FaceOfLeaf),
            Tree::Node(node) => Ok(if node.right.is_leaf() {
                Tree::graft(self.clone(), Tree::Leaf)
            } else {
                Tree::graft(node.left.clone(), node.right.parallel_last()?)
            }),
        }
    }

    /// Adds a new leaf just left of leaf `i` and parallel to it: the vertex
    /// below leaf `i` gains a sibling. `parallel(degree)` is `parallel_last`.
    pub fn parallel(&self, i: usize) -> Result<Tree> {
        let n = self.degree();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        self.parallel_unchecked(i)
    }

    fn parallel_unchecked(&self, i: usize) -> Result<Tree> {
        let (l, r) = self.split().map_err(|_| Error::FaceOfLeaf)?;
        let p = l.degree();
        Ok(if i <= p {
            if l.is_leaf() {
                Tree::graft(Tree::Leaf, Tree::graft(Tree::Leaf, r))
            } else {
                Tree::graft(l.parallel_unchecked(i)?, r)
            }
        } else if r.is_leaf() {
            Tree::graft(Tree::graft(l, Tree::Leaf), Tree::Leaf)
        } else {
            Tree::graft(l, r.parallel_unchecked(i - p - 1)?)
        })
    }

    pub fn expand(&self, i: usize, mode: ExpandMode) -> Result<Tree> {
        match mode {
            ExpandMode::Bifurcate => self.bifurcate(i),
            ExpandMode::ParallelLast => self.parallel_last(),
        }
    }

    /// `∘_i` for `1 <= i <= degree - 1`: `⊣` when `a_i > a_{i+1}`.
    pub fn product_symbol(&self, i: usize) -> Result<ProductSymbol> {
        let name = self.name();
        let n = name.len();
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        Ok(symbol_of(name[i - 1], name[i]))
    }

    /// Degrees of the two parts of the split.
    pub fn bidegree(&self) -> Result<(usize, usize)> {
        let (l, r) = self.split().map_err(|_| Error::BidegreeOfLeaf)?;
        Ok((l.degree(), r.degree()))
    }

    /// Left-right mirror image; reverses the name.
    pub fn mirror(&self) -> Tree {
        match self {
            Tree::Leaf => Tree::Leaf,
            Tree::Node(n) => Tree::graft(n.right.mirror(), n.left.mirror()),
        }
    }

    /// Every sub-tree spanning `k + 1 >= 2` consecutive leaves, with its
    /// quotient. The quotient deletes the `k - 1` interior leaves of the span.
    pub fn nested_subtrees(&self) -> Vec<Nested> {
        let a = self.name();
        let n = a.len();
        let mut out = Vec::new();
        for start in 0..n {
            for len in 1..=n - start {
                let block = &a[start..start + len];
                let top = *block.iter().max().unwrap();
                let mut rest = a[..start].to_vec();
                rest.push(top);
                rest.extend_from_slice(&a[start + len..]);
                out.push(Nested {
                    start,
                    len,
                    inner: Tree::from_sequence(block),
                    quotient: Tree::from_sequence(&rest),
                });
            }
        }
        out
    }
}

pub(crate) fn symbol_of(a: usize, b: usize) -> ProductSymbol {
    if a > b {
        ProductSymbol::LeftPointer
    } else {
        ProductSymbol::RightPointer
    }
}

pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

pub(crate) fn fmt_seq(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|a| a.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Parses `[1,3,1]`, or `[131]` when every entry is a single digit.
pub(crate) fn parse_seq(s: &str) -> Option<Vec<usize>> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?.trim();
    if inner.is_empty() {
        return None;
    }
    if inner.contains(',') {
        inner
            .split(',')
            .map(|t| {
                let t = t.trim();
                if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) || t.len() > 9 {
                    None
                } else {
                    t.parse().ok()
                }
            })
            .collect()
    } else if inner.bytes().all(|b| b.is_ascii_digit()) {
        Some(inner.bytes().map(|b| (b - b'0') as usize).collect())
    } else {
        None
    }
}

impl FromStr for Tree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tree> {
        let seq = parse_seq(s).ok_or_else(|| Error::InvalidName(s.trim().to_string()))?;
        Tree::from_name(&seq)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            f.write_str("[0]")
        } else {
            f.write_str(&fmt_seq(&self.name()))
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (a, b) = (self.name(), other.name());
        match (a.is_empty(), b.is_empty()) {
            // the leaf is named [0], which sorts first
            (true, _) => Ordering::Less,
            (_, true) => Ordering::Greater,
            _ => a.cmp(&b),
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
