use crate::lincomb::LinComb;
use crate::rational::Q;

use super::dias::PointedWord;
use super::word::Word;

fn bracket_words(a: &Word, b: &Word) -> LinComb<Word> {
    if b.len() == 1 {
        return LinComb::basis(a.concat(b));
    }
    // [ω, ω′v] = [[ω,ω′],v] − [[ω,v],ω′]
    let (v, rest) = b.0.split_last().unwrap();
    let v = LinComb::basis(Word::letter(v.clone()));
    let omega_p = LinComb::basis(Word::new(rest.to_vec()));
    let a = LinComb::basis(a.clone());
    leib_bracket_free(&leib_bracket_free(&a, &omega_p), &v) - leib_bracket_free(&leib_bracket_free(&a, &v), &omega_p)
}

/// The Leibniz bracket of the free Leibniz algebra on the tensor module.
pub fn leib_bracket_free(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    a.bilinear(b, bracket_words)
}

/// `γ` on the positions `1..=n`: `γ(ωv) = γ(ω)v − vγ(ω)`.
fn gamma_positions(n: usize) -> LinComb<Vec<usize>> {
    let one = Q::from_integer(1.into());
    let mut cur: LinComb<Vec<usize>> = LinComb::basis(vec![1]);
    for v in 2..=n {
        let mut next = LinComb::zero();
        for (w, c) in &cur {
            let mut right = w.clone();
            right.push(v);
            let mut left = vec![v];
            left.extend(w.iter().cloned());
            next.add_term(c * &one, right);
            next.add_term(-c, left);
        }
        cur = next;
    }
    cur
}

/// `γ(v_1 … v_n)`, the iterated commutator.
pub fn gamma(w: &Word) -> LinComb<Word> {
    gamma_positions(w.len()).map_basis(|pos| Word::new(pos.iter().map(|&i| w.0[i - 1].clone()).collect()))
}

/// `γ̌₁`: `γ` with the check on the letter coming from `v_1`.
pub fn gamma_check_1(w: &Word) -> LinComb<PointedWord> {
    gamma_positions(w.len()).map_basis(|pos| {
        let letters = pos.iter().map(|&i| w.0[i - 1].clone()).collect();
        let p = pos.iter().position(|&i| i == 1).unwrap();
        PointedWord::new(letters, p)
    })
}

/// Forgets the check.
pub fn fusion(p: &LinComb<PointedWord>) -> LinComb<Word> {
    p.map_basis(|pw| pw.word())
}
