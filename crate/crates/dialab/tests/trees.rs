use dialab::perm::PsiVariant;
use dialab::trees::{catalan, ProductSymbol};
use dialab::{Error, Permutation, Tree};
use proptest::prelude::*;

fn t(s: &str) -> Tree {
    s.parse().unwrap()
}

fn tree_strategy(max: usize) -> impl Strategy<Value = Tree> {
    (1..=max).prop_flat_map(|n| {
        let all = Tree::enumerate(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

#[test]
fn catalan_counts() {
    let counts: Vec<usize> = (0..=6).map(|n| Tree::enumerate(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132]);
    assert_eq!(catalan(10), 16796);
}

#[test]
fn names_of_degree_three() {
    let names: Vec<String> = Tree::enumerate(3).iter().map(Tree::to_string).collect();
    assert_eq!(names, ["[1,2,3]", "[1,3,1]", "[2,1,3]", "[3,1,2]", "[3,2,1]"]);
    assert_eq!(t("[12]"), t("[1,2]"));
    assert!(matches!("[2,2]".parse::<Tree>(), Err(Error::InvalidName(_))));
}

#[test]
fn nested_subtree_counts() {
    for n in 1..=5 {
        for y in Tree::enumerate(n) {
            let nested = y.nested_subtrees();
            assert_eq!(nested.len(), n * (n + 1) / 2);
            assert_eq!(nested.iter().filter(|s| s.inner == Tree::corolla()).count(), n);
            assert_eq!(nested.iter().filter(|s| s.quotient == Tree::corolla()).count(), 1);
        }
    }
}

#[test]
fn product_symbols_of_a_permutation_follow_its_tree() {
    for s in Permutation::all(4) {
        let y = s.psi();
        for i in 1..4 {
            assert_eq!(s.product_symbol(i).unwrap(), y.product_symbol(i).unwrap());
        }
    }
    assert_eq!(t("[2,1]").product_symbol(1).unwrap(), ProductSymbol::LeftPointer);
}

#[test]
fn fibers_partition_the_symmetric_group() {
    for n in 1..=5 {
        for variant in [PsiVariant::Depth, PsiVariant::Height] {
            let total: usize = Tree::enumerate(n).iter().map(|y| Permutation::fiber(y, variant).len()).sum();
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }
}

proptest! {
    #[test]
    fn name_round_trip(y in tree_strategy(7)) {
        let back = Tree::from_name(&y.name()).unwrap();
        prop_assert_eq!(&back, &y);
        prop_assert_eq!(y.to_string().parse::<Tree>().unwrap(), y);
    }

    #[test]
    fn nested_quotient_replays_leaf_removal(y in tree_strategy(5)) {
        let n = y.degree();
        for s in y.nested_subtrees() {
            let mut z = y.clone();
            for _ in 1..s.len {
                z = z.face(s.start + 1).unwrap();
            }
            prop_assert_eq!(&z, &s.quotient);
            prop_assert_eq!(s.inner.degree() + s.quotient.degree(), n + 1);
        }
    }

    #[test]
    fn mirror_reverses_names(y in tree_strategy(7)) {
        let mut name = y.name();
        name.reverse();
        prop_assert_eq!(y.mirror().name(), name);
        prop_assert_eq!(y.mirror().mirror(), y);
    }

    #[test]
    fn faces_lower_the_degree(y in tree_strategy(6)) {
        let n = y.degree();
        for i in 0..=n {
            prop_assert_eq!(y.face(i).unwrap().degree(), n - 1);
            prop_assert_eq!(y.bifurcate(i).unwrap().face(i).unwrap(), y.clone());
        }
        prop_assert!(y.face(n + 1).is_err());
    }

    #[test]
    fn psi_is_surjective_onto_its_tree(v in Just(()).prop_flat_map(|_| (1usize..=6).prop_flat_map(|n| Just(n).prop_perturb(|n, mut rng| {
        let mut p: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            p.swap(i, j);
        }
        p
    })))) {
        let s = Permutation::new(v).unwrap();
        prop_assert!(Permutation::fiber(&s.psi(), PsiVariant::Depth).contains(&s));
        prop_assert_eq!(s.psi_prime(), s.complement().psi());
    }
}
