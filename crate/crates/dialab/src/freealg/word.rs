use std::fmt;
use std::sync::Arc;

/// An interned generator symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym(Arc<str>);

impl Sym {
    pub fn new(s: &str) -> Sym {
        Sym(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Generators `x1, …, xd`; a single generator is named `x`.
    pub fn generators(d: usize) -> Vec<Sym> {
        if d == 1 {
            vec![Sym::new("x")]
        } else {
            (1..=d).map(|i| Sym::new(&format!("x{i}"))).collect()
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A nonempty word of generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Sym>);

impl Word {
    pub fn new(letters: Vec<Sym>) -> Word {
        assert!(!letters.is_empty(), "words are nonempty");
        Word(letters)
    }

    pub fn letter(s: Sym) -> Word {
        Word(vec![s])
    }

    pub fn from_names(names: &[&str]) -> Word {
        Word::new(names.iter().map(|s| Sym::new(s)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Sym] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    /// All words of length `n` over `gens`, lexicographically.
    pub fn all(gens: &[Sym], n: usize) -> Vec<Word> {
        let mut out: Vec<Vec<Sym>> = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    gens.iter().map(move |g| {
                        let mut w = w.clone();
                        w.push(g.clone());
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Word).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|s| s.as_str()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
