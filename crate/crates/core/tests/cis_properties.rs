use hypertree_core::cis::{decorated_cis, prelie_cis_closed, Cis};
use hypertree_core::foundation::{integer_partitions, rat, IntPartition, TPoly};
use hypertree_core::hypertree::Kind;
use hypertree_core::species::BlockSpecies;
use proptest::prelude::*;

const N: u32 = 4;

fn arb_tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec((-1i64..3, -3i64..4), 0..3)
        .prop_map(|v| TPoly::from_terms(v.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

/// Random series with no constant term unless `constant` is set.
fn arb_cis(constant: bool) -> impl Strategy<Value = Cis> {
    let lo = if constant { 0 } else { 1 };
    let parts: Vec<IntPartition> = (lo..=N).flat_map(integer_partitions).collect();
    prop::collection::vec((0..parts.len(), arb_tpoly()), 0..5)
        .prop_map(move |v| Cis::from_terms(N, v.into_iter().map(|(i, c)| (parts[i].clone(), c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn plethysm_is_associative(f in arb_cis(true), g in arb_cis(false), h in arb_cis(false)) {
        let left = f.plethysm(&g.plethysm(&h).unwrap()).unwrap();
        let right = f.plethysm(&g).unwrap().plethysm(&h).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn suspension_commutes_with_plethysm(f in arb_cis(true), g in arb_cis(false)) {
        let left = f.plethysm(&g).unwrap().suspension(false);
        let right = f.suspension(false).plethysm(&g.suspension(false)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn suspension_is_an_involution(f in arb_cis(true)) {
        prop_assert_eq!(f.suspension(false).suspension(false), f);
    }

    #[test]
    fn negative_suspension_is_composition_with_minus_p1(f in arb_cis(true)) {
        let minus = Cis::p1(N).neg();
        prop_assert_eq!(f.suspension(false).neg(), f.plethysm(&minus).unwrap());
    }

    #[test]
    fn derivative_is_a_derivation(f in arb_cis(true), g in arb_cis(true)) {
        let left = f.mul(&g).unwrap().derivative();
        let right = f.derivative().mul(&g.truncate(N - 1).unwrap()).unwrap()
            .add(&f.truncate(N - 1).unwrap().mul(&g.derivative()).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn fixed_counts_are_nonnegative_integer_polynomials() {
    for name in ["Comm", "Assoc", "Perm", "Cycle", "PreLie"] {
        let b = BlockSpecies::parse(name).unwrap();
        for kind in [Kind::Rooted, Kind::Hollow, Kind::RootedEdgePointed] {
            let z = decorated_cis(kind, &b, 5).unwrap();
            for n in 2..=5 {
                for l in integer_partitions(n) {
                    let c = z.fixed_count(&l);
                    assert!(
                        c.has_nonnegative_integer_coeffs(),
                        "{name} {kind:?} {l}: {c}"
                    );
                }
            }
        }
    }
    for name in ["Comm", "Assoc"] {
        let b = BlockSpecies::parse(name).unwrap();
        for kind in [Kind::Plain, Kind::EdgePointed] {
            let z = decorated_cis(kind, &b, 5).unwrap();
            for n in 2..=5 {
                for l in integer_partitions(n) {
                    assert!(
                        z.fixed_count(&l).has_nonnegative_integer_coeffs(),
                        "{name} {kind:?} {l}"
                    );
                }
            }
        }
    }
}

/// The antiderivative of PreLie acts on a two-label edge by the sign.
#[test]
fn prelie_edge_decoration_is_virtual() {
    let b = BlockSpecies::parse("PreLie").unwrap();
    let z = decorated_cis(Kind::Plain, &b, 2).unwrap();
    assert_eq!(
        z.fixed_count(&IntPartition::new(vec![2])),
        TPoly::from_int(-1)
    );
    assert_eq!(z.fixed_count(&IntPartition::ones(2)), TPoly::one());
}

#[test]
fn dissymmetry_holds_for_series() {
    for name in ["Comm", "Assoc", "Lie", "PreLie"] {
        let b = BlockSpecies::parse(name).unwrap();
        let z = |k| decorated_cis(k, &b, 5).unwrap();
        let left = z(Kind::Plain).add(&z(Kind::RootedEdgePointed)).unwrap();
        let right = z(Kind::Rooted).add(&z(Kind::EdgePointed)).unwrap();
        assert_eq!(left, right, "{name}");
    }
}

#[test]
fn closed_prelie_hollow_is_the_rescaled_composition() {
    let b = BlockSpecies::parse("PreLie").unwrap();
    assert_eq!(
        prelie_cis_closed(Kind::Hollow, 5),
        decorated_cis(Kind::Hollow, &b, 5).unwrap()
    );
}
