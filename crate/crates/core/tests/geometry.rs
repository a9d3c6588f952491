use std::collections::BTreeSet;

use g2_core::apartment::*;
use g2_core::arith::{int, rat, Rational};
use g2_core::lattices::{order_at, ExponentLattice};

/// `(α, β)` with `(δ, δ) = 1`, `(γ, γ) = 3`, `(δ, γ) = −3/2`.
fn form(a: Root, b: Root) -> Rational {
    int(a.m * b.m) + int(3 * a.n * b.n) - rat(3, 2) * int(a.m * b.n + a.n * b.m)
}

/// `α∨ = 2α/(α, α)` in the basis `δ∨ = 2δ`, `γ∨ = 2γ/3`.
fn coroot_oracle(a: Root) -> Coroot {
    let len = form(a, a);
    let cd = int(a.m) / &len;
    let cg = int(3 * a.n) / &len;
    assert!(cd.is_integer() && cg.is_integer());
    Coroot::new(
        cd.to_integer().try_into().unwrap(),
        cg.to_integer().try_into().unwrap(),
    )
}

#[test]
fn cartan_matrix_entries() {
    assert_eq!(cartan_matrix(), [[2, -3], [-1, 2]]);
}

#[test]
fn coroot_identities() {
    assert_eq!(coroot_of(Root::new(1, 1)).unwrap(), Coroot::new(1, 3));
    assert_eq!(coroot_of(Root::new(2, 1)).unwrap(), Coroot::new(2, 3));
    assert_eq!(coroot_of(Root::new(3, 1)).unwrap(), Coroot::new(1, 1));
    assert_eq!(coroot_of(Root::new(3, 2)).unwrap(), Coroot::new(1, 2));
    for r in Root::all() {
        assert_eq!(coroot_of(r).unwrap(), coroot_oracle(r), "{r}");
        assert_eq!(coroot_of(-r).unwrap(), -coroot_of(r).unwrap());
    }
}

#[test]
fn reflected_coroots_follow_the_reflection_formula() {
    for a in Root::all() {
        let av = coroot_of(a).unwrap();
        for b in Root::all() {
            let bv = coroot_of(b).unwrap();
            let k = pairing(a, bv);
            let expected = Coroot::new(bv.c_delta - k * av.c_delta, bv.c_gamma - k * av.c_gamma);
            assert_eq!(coroot_of(reflect(a, b)).unwrap(), expected, "s_{a}({b})");
        }
    }
}

#[test]
fn pairings_match_the_inner_product() {
    for a in Root::all() {
        for b in Root::all() {
            let expected = int(2) * form(a, b) / form(b, b);
            assert_eq!(int(pairing(a, coroot_of(b).unwrap())), expected);
        }
    }
    assert_eq!(pairing(Root::DELTA, Coroot::new(1, 2)), 0);
    assert_eq!(pairing(Root::new(3, 1), Coroot::new(1, 1)), 2);
}

#[test]
fn weyl_group_has_order_twelve_and_permutes_roots() {
    let w = weyl_group();
    assert_eq!(w.len(), 12);
    assert_eq!(weyl_group_order(), 12);
    let roots = Root::all();
    for g in &w {
        let image: BTreeSet<usize> = g.iter().copied().collect();
        assert_eq!(image.len(), 12);
        // Weyl elements preserve the inner product.
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(form(roots[i], roots[j]), form(roots[g[i]], roots[g[j]]));
            }
        }
    }
}

#[test]
fn origin_is_type_one() {
    assert_eq!(vertex_type(&ApartmentPoint::origin()), VertexType::Type1);
    for c in [Coroot::new(1, 1), Coroot::new(0, 1), Coroot::new(-1, -2)] {
        assert_eq!(
            vertex_type(&ApartmentPoint::from_coroot(c)),
            VertexType::Type1
        );
    }
}

#[test]
fn vertex_type_counts_in_a_fundamental_region() {
    let v = vertices_in_region(&int(-1), &int(-2), &int(1), &int(2));
    let count = |t| v.iter().filter(|(_, vt)| *vt == t).count();
    assert!(v.iter().all(|(p, t)| vertex_type(p) == *t));
    assert!(count(VertexType::Type1) >= 7);
    assert!(count(VertexType::Type2) > count(VertexType::Type1));
    assert!(count(VertexType::Type3) > count(VertexType::Type1));
    assert!(vertices_in_region(&int(1), &int(1), &int(0), &int(0)).is_empty());
}

#[test]
fn torus_transport_generates_the_type_one_neighbours() {
    let standard = ExponentLattice::standard();
    let mut labels = BTreeSet::new();
    for t in [[1, -1, 0], [0, 1, -1], [-1, 0, 1]] {
        for s in [1, -1] {
            labels.insert(standard.transport(t.map(|e| e * s)).unwrap().to_string());
        }
    }
    let expected: BTreeSet<String> = [(1, 1), (1, 2), (0, 1), (-1, -1), (-1, -2), (0, -1)]
        .iter()
        .map(|&(x, y)| order_at(&ApartmentPoint::new(int(x), int(y))).to_string())
        .collect();
    assert_eq!(labels.len(), 6);
    assert_eq!(labels, expected);
}
