use g2_core::apartment::ApartmentPoint;
use g2_core::arith::{int, rat, val_p, Prime, Rational, Ring};
use g2_core::automorphisms::{h_alpha, w_alpha, AutWord, Generator, RootLabel};
use g2_core::lattices::{
    intermediate_fn, intermediate_fn_at, valuation_of, ExponentLattice, LatticeSequence,
};
use g2_core::octonion::{BasisIndex, Octonion};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        rng_seed: RngSeed::Fixed(20),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn p() -> Prime {
    Prime::default()
}

fn scalar() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12, -2i64..=2).prop_map(|(n, d, k)| rat(n, d) * p().pow(k))
}

fn nonzero_scalar() -> impl Strategy<Value = Rational> {
    scalar().prop_filter("nonzero", |c| !c.is_zero())
}

fn octonion() -> impl Strategy<Value = Octonion<Rational>> {
    proptest::array::uniform8(scalar()).prop_map(Octonion::from_coords)
}

fn label() -> impl Strategy<Value = RootLabel> {
    (0usize..12).prop_map(|i| RootLabel::all()[i])
}

fn word() -> impl Strategy<Value = AutWord<Rational>> {
    proptest::collection::vec((label(), 0u8..3, nonzero_scalar()), 1..=4).prop_map(|parts| {
        parts.into_iter().fold(AutWord::empty(), |w, (l, kind, t)| {
            let piece = match kind {
                0 => AutWord::single(Generator::Root(l, t)),
                1 => h_alpha(l, &t).unwrap(),
                _ => w_alpha(l, &t).unwrap(),
            };
            w.then(&piece)
        })
    })
}

fn lattice() -> impl Strategy<Value = ExponentLattice> {
    proptest::array::uniform8(-3i64..=3).prop_map(ExponentLattice::new)
}

fn point() -> impl Strategy<Value = ApartmentPoint> {
    (-36i64..=36, -36i64..=36).prop_map(|(x, y)| ApartmentPoint::new(rat(x, 12), rat(y, 12)))
}

/// `N(x) = a·d − v·w` read off the coordinates `(a, v, w, d)`.
fn norm_oracle(x: &Octonion<Rational>) -> Rational {
    let c = x.coords();
    &c[0] * &c[7]
        - (1..4)
            .map(|i| &c[i] * &c[i + 3])
            .fold(int(0), |acc, t| acc + t)
}

/// The dual exponent at `j`: the least `k` with `T(p^{a_i} b_i · p^k b_j) ∈ ℤ_p` for all `i`.
fn dual_oracle(l: &ExponentLattice) -> [i64; 8] {
    std::array::from_fn(|j| {
        BasisIndex::ALL
            .iter()
            .filter_map(|&bi| {
                let t = (&Octonion::<Rational>::basis(bi)
                    * &Octonion::basis(BasisIndex::from_coord(j)))
                    .trace();
                val_p(&t, p()).finite().map(|v| -l.exp(bi.coord()) - v)
            })
            .max()
            .unwrap()
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn norm_is_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.norm(), norm_oracle(&x));
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn characteristic_identity(x in octonion()) {
        let lhs = &(&(&x * &x) - &x.scale(&x.trace())) + &Octonion::one().scale(&x.norm());
        prop_assert!(lhs.is_zero());
        prop_assert_eq!(x.trace(), &x.coords()[0] + &x.coords()[7]);
    }

    #[test]
    fn conjugation_reverses_products(x in octonion(), y in octonion()) {
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(&x * &x.conj(), Octonion::one().scale(&x.norm()));
    }

    #[test]
    fn octonions_are_alternative(x in octonion(), y in octonion()) {
        prop_assert_eq!(&(&x * &x) * &y, &x * &(&x * &y));
        prop_assert_eq!(&(&y * &x) * &x, &y * &(&x * &x));
    }

    #[test]
    fn automorphisms_preserve_norm_and_product(g in word(), x in octonion(), y in octonion()) {
        let (gx, gy) = (g.apply(&x), g.apply(&y));
        prop_assert_eq!(gx.norm(), x.norm());
        prop_assert_eq!(g.apply(&(&x * &y)), &gx * &gy);
        prop_assert_eq!(g.inverse().apply(&gx), x);
    }

    #[test]
    fn dual_is_an_order_reversing_involution(a in lattice(), b in lattice()) {
        prop_assert_eq!(a.dual().exps(), dual_oracle(&a));
        prop_assert_eq!(a.dual().dual(), a);
        let big = a.sum(&b);
        prop_assert!(a.is_subset(&big));
        prop_assert!(big.dual().is_subset(&a.dual()));
    }

    #[test]
    fn valuation_round_trip_on_apartment_points(pt in point(), x in octonion()) {
        let v = intermediate_fn_at(&pt);
        let seq = LatticeSequence::new(v.clone());
        prop_assert_eq!(seq.valuation(&x, p()), valuation_of(&x, &v, p()));
    }

    #[test]
    fn valuation_round_trip_on_named_functions(k in 1usize..=5, x in octonion()) {
        let v = intermediate_fn(&format!("v{k}")).unwrap();
        let seq = LatticeSequence::new(v.clone());
        prop_assert_eq!(seq.valuation(&x, p()), valuation_of(&x, &v, p()));
    }
}

#[test]
fn library_suites_pass_with_a_fixed_seed() {
    for suite in g2_core::properties::all_suites(7, 1000, p()) {
        assert!(suite.cases >= 1000, "{}", suite.name);
        assert!(
            suite.passed(),
            "{}: {:?}",
            suite.name,
            &suite.failures[..suite.failures.len().min(3)]
        );
    }
}
