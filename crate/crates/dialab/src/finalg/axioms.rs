use crate::freealg::Op;
use crate::rational::Q;

use super::{FiniteAlgebra, Kind};

/// An axiom failing on a basis triple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: (usize, usize, usize),
}

/// One side of an axiom: `Σ sign · (a op1 b) op2 c` or `a op1 (b op2 c)`, with
/// the arguments permuted.
#[derive(Clone, Copy)]
enum Shape {
    /// `(x op1 y) op2 z`
    LeftNested(Op, Op),
    /// `x op1 (y op2 z)`
    RightNested(Op, Op),
}

struct Monomial {
    sign: i64,
    shape: Shape,
    /// positions of x, y, z in the argument list
    args: [usize; 3],
}

const XYZ: [usize; 3] = [0, 1, 2];
const XZY: [usize; 3] = [0, 2, 1];

fn m(sign: i64, shape: Shape, args: [usize; 3]) -> Monomial {
    Monomial { sign, shape, args }
}

fn axioms(kind: Kind) -> Vec<(&'static str, Vec<Monomial>)> {
    use Op::*;
    use Shape::*;
    match kind {
        Kind::Dialgebra => vec![
            ("D1", vec![m(1, LeftNested(Left, Left), XYZ), m(-1, RightNested(Left, Right), XYZ)]),
            ("D2", vec![m(1, LeftNested(Left, Left), XYZ), m(-1, RightNested(Left, Left), XYZ)]),
            ("D3", vec![m(1, LeftNested(Right, Left), XYZ), m(-1, RightNested(Right, Left), XYZ)]),
            ("D4", vec![m(1, LeftNested(Left, Right), XYZ), m(-1, RightNested(Right, Right), XYZ)]),
            ("D5", vec![m(1, LeftNested(Right, Right), XYZ), m(-1, RightNested(Right, Right), XYZ)]),
        ],
        Kind::Dendriform => vec![
            (
                "i",
                vec![
                    m(1, LeftNested(Prec, Prec), XYZ),
                    m(-1, RightNested(Prec, Prec), XYZ),
                    m(-1, RightNested(Prec, Succ), XYZ),
                ],
            ),
            ("ii", vec![m(1, LeftNested(Succ, Prec), XYZ), m(-1, RightNested(Succ, Prec), XYZ)]),
            (
                "iii",
                vec![
                    m(1, LeftNested(Prec, Succ), XYZ),
                    m(1, LeftNested(Succ, Succ), XYZ),
                    m(-1, RightNested(Succ, Succ), XYZ),
                ],
            ),
        ],
        Kind::Leibniz => vec![(
            "leibniz",
            vec![
                m(1, RightNested(Bracket, Bracket), XYZ),
                m(-1, LeftNested(Bracket, Bracket), XYZ),
                m(1, LeftNested(Bracket, Bracket), XZY),
            ],
        )],
        Kind::Zinbiel => vec![(
            "zinbiel",
            vec![
                m(1, LeftNested(Dot, Dot), XYZ),
                m(-1, RightNested(Dot, Dot), XYZ),
                m(-1, RightNested(Dot, Dot), XZY),
            ],
        )],
        Kind::Associative => vec![("assoc", vec![m(1, LeftNested(Mult, Mult), XYZ), m(-1, RightNested(Mult, Mult), XYZ)])],
    }
}

/// Checks every axiom of the algebra's kind on every basis triple. The
/// report is sorted by axiom id, then witness.
pub fn check_axioms(a: &FiniteAlgebra) -> Vec<Violation> {
    let k = a.dim();
    let mut out = Vec::new();
    let axs = axioms(a.kind());
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let e = [i, j, l];
                for (id, monos) in &axs {
                    let mut acc = vec![Q::from_integer(0.into()); k];
                    for mo in monos {
                        let [x, y, z] = mo.args.map(|p| e[p]);
                        let v = match mo.shape {
                            Shape::LeftNested(o1, o2) => {
                                let xy = &a.table(o1).unwrap()[x][y];
                                a.mul_vec(o2, xy, &a.unit_vec(z))
                            }
                            Shape::RightNested(o1, o2) => {
                                let yz = &a.table(o2).unwrap()[y][z];
                                a.mul_vec(o1, &a.unit_vec(x), yz)
                            }
                        };
                        let s = Q::from_integer(mo.sign.into());
                        for (t, w) in acc.iter_mut().zip(v) {
                            *t += &s * w;
                        }
                    }
                    if acc.iter().any(|c| c != &Q::from_integer(0.into())) {
                        out.push(Violation { axiom: id, witness: (i, j, l) });
                    }
                }
            }
        }
    }
    out.sort();
    out
}
