use std::collections::BTreeMap;

use dialab::finalg::fixtures::{
    assoc_base, diff_algebra, fixture_capped, DENDRIFORM_CATALOG, DIALGEBRA_CATALOG, LEIBNIZ_CATALOG, ZINBIEL_CATALOG,
};
use dialab::finalg::{
    algebra_from_json, algebra_from_json_deferred, algebra_to_json, associativization, bar_units, check_axioms,
    fixture, leibnizification, opposite, FiniteAlgebra, Kind,
};
use dialab::freealg::Op;
use dialab::rational::{q, qf};
use dialab::{Error, Q};

fn index_of(a: &FiniteAlgebra, name: &str) -> usize {
    a.basis().iter().position(|b| b == name).unwrap_or_else(|| panic!("{name} not in {:?}", a.basis()))
}

#[test]
fn every_fixture_passes_its_axioms() {
    for (names, kind) in [
        (DIALGEBRA_CATALOG, Kind::Dialgebra),
        (DENDRIFORM_CATALOG, Kind::Dendriform),
        (ZINBIEL_CATALOG, Kind::Zinbiel),
        (LEIBNIZ_CATALOG, Kind::Leibniz),
    ] {
        for name in names {
            let a = fixture(name).unwrap();
            assert_eq!(a.kind(), kind, "{name}");
            assert!(check_axioms(&a).is_empty(), "{name}");
        }
    }
}

#[test]
fn fixture_dimensions() {
    for (name, dim) in [
        ("tensor-square-C2", 4),
        ("free-dias-1-3", 6),
        ("free-dias-2-2", 10),
        ("free-dend-1-3", 8),
        ("free-zinb-2-2", 6),
        ("dimonoid-C3", 9),
        ("matrix2-dimonoid-C2", 16),
        ("vectors3-C2", 6),
    ] {
        assert_eq!(fixture(name).unwrap().dim(), dim, "{name}");
    }
}

#[test]
fn fixture_errors() {
    assert!(matches!(fixture("nonsense"), Err(Error::UnknownFixture(_))));
    assert!(matches!(fixture("assoc-C0"), Err(Error::UnknownFixture(_))));
    assert!(matches!(fixture("free-dias-2-5"), Err(Error::TooLarge { .. })));
    assert!(matches!(fixture_capped("dimonoid-C3", 8), Err(Error::TooLarge { dim: 9, cap: 8 })));
}

#[test]
fn diff_algebra_rejects_bad_derivations() {
    let a = assoc_base("upper2").unwrap();
    let id: Vec<Vec<Q>> = (0..3).map(|i| a.unit_vec(i)).collect();
    assert!(matches!(diff_algebra(&a, &id), Err(Error::InvalidArgument(_))));
    // square-zero, but not a derivation: e11 -> e12 only
    let mut d = vec![vec![q(0); 3]; 3];
    d[0][1] = q(1);
    assert!(matches!(diff_algebra(&a, &d), Err(Error::InvalidArgument(_))));
}

#[test]
fn halo_of_the_field_is_one() {
    let h = bar_units(&fixture("field").unwrap()).unwrap();
    assert_eq!(h.particular, Some(vec![q(1)]));
    assert!(h.directions.is_empty());
}

#[test]
fn halo_of_tensor_square() {
    let d = fixture("tensor-square-C2").unwrap();
    let h = bar_units(&d).unwrap();
    // g has order 2, so g⊗g⁻¹ = g⊗g
    for name in ["1⊗1", "g⊗g"] {
        assert!(h.contains(&d.unit_vec(index_of(&d, name))), "{name}");
    }
    assert!(!h.contains(&d.unit_vec(index_of(&d, "1⊗g"))));
    let mut mid = vec![q(0); 4];
    mid[index_of(&d, "1⊗1")] = qf(1, 2);
    mid[index_of(&d, "g⊗g")] = qf(1, 2);
    assert!(h.contains(&mid));
}

#[test]
fn halo_of_zero_algebra_is_empty() {
    assert!(bar_units(&fixture("abelian-dialgebra-1").unwrap()).unwrap().is_empty());
}

#[test]
fn associativization_examples() {
    let d = fixture("assoc-upper2").unwrap();
    let a = associativization(&d).unwrap();
    assert!(a.ideal.is_empty());
    assert_eq!(a.algebra.dim(), 3);

    let a = associativization(&fixture("free-dias-1-2").unwrap()).unwrap();
    assert_eq!(a.algebra.dim(), 2);

    let json = r#"{"kind":"dialgebra","basis":["e"],"tables":{"left":[[[1]]],"right":[[[0]]]}}"#;
    let bad = algebra_from_json_deferred(json).unwrap();
    assert!(check_axioms(&bad).iter().any(|v| v.axiom == "D1"));
    assert!(matches!(algebra_from_json(json), Err(Error::AxiomFailure { .. })));
    assert_eq!(associativization(&bad).unwrap().algebra.dim(), 0);
}

#[test]
fn associativization_is_idempotent() {
    for name in DIALGEBRA_CATALOG {
        let a = associativization(&fixture(name).unwrap()).unwrap().algebra;
        let again = associativization(&a.as_dialgebra().unwrap()).unwrap();
        assert!(again.ideal.is_empty(), "{name}");
    }
}

#[test]
fn opposite_is_an_involution() {
    for name in DIALGEBRA_CATALOG {
        let d = fixture(name).unwrap();
        assert_eq!(opposite(&opposite(&d).unwrap()).unwrap(), d, "{name}");
    }
}

#[test]
fn leibnizification_of_associative_is_commutator() {
    for base in ["K", "C3", "upper2", "M2", "dual"] {
        let a = assoc_base(base).unwrap();
        let l = leibnizification(&a.as_dialgebra().unwrap()).unwrap();
        let m = a.table(Op::Mult).unwrap();
        let b = l.table(Op::Bracket).unwrap();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let expect: Vec<Q> = m[i][j].iter().zip(&m[j][i]).map(|(x, y)| x - y).collect();
                assert_eq!(b[i][j], expect);
            }
        }
    }
}

#[test]
fn leibnizification_of_tensor_square_and_abelian() {
    let l = leibnizification(&fixture("tensor-square-C2").unwrap()).unwrap();
    assert!(check_axioms(&l).is_empty());
    let z = leibnizification(&fixture("abelian-dialgebra-2").unwrap()).unwrap();
    assert!(z.table(Op::Bracket).unwrap().iter().flatten().flatten().all(|c| *c == q(0)));
}

#[test]
fn matrix_dialgebras_pass_axioms() {
    for base in ["field", "dimonoid-C2", "gset-C2", "diff-upper2", "tensor-square-C2"] {
        let m = fixture(&format!("matrix2-{base}")).unwrap();
        assert!(check_axioms(&m).is_empty(), "{base}");
    }
}

#[test]
fn json_round_trip() {
    for name in DIALGEBRA_CATALOG.iter().chain(LEIBNIZ_CATALOG) {
        let a = fixture(name).unwrap();
        let text = algebra_to_json(&a).to_string();
        let b = algebra_from_json(&text).unwrap();
        assert_eq!(a, b, "{name}");
        assert_eq!(algebra_to_json(&b).to_string(), text);
    }
    let mut tables = BTreeMap::new();
    tables.insert(Op::Mult, vec![vec![vec![qf(3, 7)]]]);
    let a = FiniteAlgebra::new_deferred(Kind::Associative, vec!["u".into()], tables).unwrap();
    let text = algebra_to_json(&a).to_string();
    assert!(text.contains("\"3/7\""));
    assert_eq!(algebra_from_json_deferred(&text).unwrap(), a);
}

#[test]
fn json_errors() {
    for bad in [
        "",
        "[]",
        r#"{"kind":"magma","basis":[],"tables":{}}"#,
        r#"{"kind":"leibniz","basis":["a"],"tables":{}}"#,
        r#"{"kind":"leibniz","basis":["a"],"tables":{"bracket":[[[1,2]]]}}"#,
        r#"{"kind":"leibniz","basis":["a","a"],"tables":{"bracket":[[[0,0],[0,0]],[[0,0],[0,0]]]}}"#,
        r#"{"kind":"leibniz","basis":["a"],"tables":{"bracket":[[["x"]]]}}"#,
        r#"{"kind":"leibniz","basis":["a"],"tables":{"bracket":[[[0]]],"dot":[[[0]]]}}"#,
    ] {
        assert!(algebra_from_json_deferred(bad).is_err(), "{bad}");
    }
}
