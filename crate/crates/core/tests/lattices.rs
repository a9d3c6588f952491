use g2_core::apartment::{vertex_type, ApartmentPoint, VertexType};
use g2_core::arith::{int, rat, Prime, Rational};
use g2_core::lattices::*;
use g2_core::octonion::{BasisIndex, Octonion};

fn l(s: &str) -> ExponentLattice {
    s.parse().unwrap()
}

fn pt(x: Rational, y: Rational) -> ApartmentPoint {
    ApartmentPoint::new(x, y)
}

/// Vertex positions and published labels of the three vertex figures.
fn figure_vertices() -> Vec<(ApartmentPoint, VertexType, &'static str)> {
    vec![
        (pt(int(1), int(1)), VertexType::Type1, "L[0 -1 1; 0 1 -1]"),
        (pt(int(1), int(2)), VertexType::Type1, "L[1 -1 0; -1 1 0]"),
        (pt(int(0), int(1)), VertexType::Type1, "L[1 0 -1; -1 0 1]"),
        (pt(int(-1), int(-1)), VertexType::Type1, "L[0 1 -1; 0 -1 1]"),
        (pt(int(-1), int(-2)), VertexType::Type1, "L[-1 1 0; 1 -1 0]"),
        (pt(int(0), int(-1)), VertexType::Type1, "L[-1 0 1; 1 0 -1]"),
        (
            pt(rat(1, 2), rat(1, 2)),
            VertexType::Type2,
            "L[0 0 1; 0 1 0]",
        ),
        (pt(rat(1, 2), int(1)), VertexType::Type2, "L[1 0 0; 0 1 0]"),
        (pt(int(0), rat(1, 2)), VertexType::Type2, "L[1 0 0; 0 0 1]"),
        (
            pt(rat(-1, 2), rat(-1, 2)),
            VertexType::Type2,
            "L[0 1 0; 0 0 1]",
        ),
        (
            pt(rat(-1, 2), int(-1)),
            VertexType::Type2,
            "L[0 1 0; 1 0 0]",
        ),
        (pt(int(0), rat(-1, 2)), VertexType::Type2, "L[0 0 1; 1 0 0]"),
        (pt(rat(1, 3), int(0)), VertexType::Type3, "L[0 0 1; 1 1 0]"),
        (pt(rat(2, 3), int(1)), VertexType::Type3, "L[1 0 1; 0 1 0]"),
        (pt(rat(1, 3), int(1)), VertexType::Type3, "L[1 0 0; 0 1 1]"),
        (pt(rat(-1, 3), int(0)), VertexType::Type3, "L[1 1 0; 0 0 1]"),
        (
            pt(rat(-2, 3), int(-1)),
            VertexType::Type3,
            "L[0 1 0; 1 0 1]",
        ),
        (
            pt(rat(-1, 3), int(-1)),
            VertexType::Type3,
            "L[0 1 1; 1 0 0]",
        ),
    ]
}

#[test]
fn duals_of_worked_examples() {
    assert_eq!(
        ExponentLattice::standard().dual(),
        ExponentLattice::standard()
    );
    assert_eq!(l("L[1 0 0; 0 1 0]").dual(), l("L[0 -1 0; -1 0 0]"));
    assert_eq!(l("L[1 0 1; 0 1 0]").dual(), l("L[0 -1 0; -1 0 -1]"));
}

#[test]
fn dual_squares_of_worked_examples() {
    let a = l("L[0 -1 0; -1 0 0]");
    assert_eq!(a.product(&a), l("L[0 -1 -1 | -1 ; -1 0 -1 | -1]"));
    let b = l("L[0 -1 0; -1 0 -1]");
    assert_eq!(b.product(&b), l("L[-1 -2 -1 | -1 ; -1 0 -1 | -1]"));
    let s = ExponentLattice::standard();
    assert_eq!(s.product(&s), s);
}

#[test]
fn type_three_self_dual_lattice() {
    let sq = l("L[-1 -2 -1 | -1 ; -1 0 -1 | -1]");
    let m = sq.scale(1).sum(&l("L[1 0 1; 0 1 0]"));
    assert_eq!(m, l("L[0 -1 0; 0 1 0]"));
    assert!(m.is_self_dual());
}

#[test]
fn featured_classifications() {
    assert_eq!(
        classify_vertex_order(&l("L[1 -1 0; -1 1 0]")),
        VertexOrder::Type1Maximal
    );
    assert_eq!(
        classify_vertex_order(&l("L[1 0 0; 0 1 0]")),
        VertexOrder::Type2
    );
    assert_eq!(
        classify_vertex_order(&l("L[1 0 1; 0 1 0]")),
        VertexOrder::Type3 {
            m: l("L[0 -1 0; 0 1 0]")
        }
    );
    assert_eq!(
        classify_vertex_order(&l("L[0 0 0 | -1 ; 0 0 0 | 0]")),
        VertexOrder::None
    );
    assert_eq!(
        classify_vertex_order(&l("L[1 0 1; 0 1 0]")).to_string(),
        "type3, M = L[0 -1 0; 0 1 0]"
    );
}

#[test]
fn figure_vertices_have_published_labels_and_types() {
    for (p, t, label) in figure_vertices() {
        assert_eq!(vertex_type(&p), t, "{p}");
        assert_eq!(order_at(&p), l(label), "{p}");
        let expected = match t {
            VertexType::Type1 => "type1",
            VertexType::Type2 => "type2",
            _ => "type3",
        };
        let got = classify_vertex_order(&l(label)).to_string();
        assert!(got.starts_with(expected), "{label}: {got}");
    }
}

#[test]
fn figure_incidences_follow_containment() {
    let verts = figure_vertices();
    let origin = ExponentLattice::standard();
    for (_, t, label) in &verts {
        if *t != VertexType::Type1 {
            assert!(l(label).is_subset(&origin), "{label} ⊄ standard");
        }
    }
    // Each type-2 vertex lies on the edge between the origin and the type-1
    // vertex in the same direction.
    for k in 0..6 {
        assert!(l(verts[6 + k].2).is_subset(&l(verts[k].2)));
    }
    let blue = l("L[1 0 1; 0 1 0]");
    for outer in [
        "L[1 0 0; 0 1 0]",
        "L[1 -1 0; -1 1 0]",
        "L[0 0 1; 0 1 0]",
        "L[0 -1 1; 0 1 -1]",
    ] {
        assert!(blue.is_subset(&l(outer)), "{outer}");
    }
    // Chamber chain: type 3 ⊂ type 2 ⊂ type 1.
    let (l3, l2, l1) = (blue, l("L[1 0 0; 0 1 0]"), l("L[1 -1 0; -1 1 0]"));
    assert!(l3.is_proper_subset(&l2) && l2.is_proper_subset(&l1));
}

#[test]
fn sixth_type_two_order_around_the_blue_vertex() {
    let sixth = pt(int(1), rat(3, 2));
    assert_eq!(vertex_type(&sixth), VertexType::Type2);
    let label = order_at(&sixth);
    assert_eq!(classify_vertex_order(&label), VertexOrder::Type2);
    assert!(l("L[1 0 1; 0 1 0]").is_subset(&label));
}

#[test]
fn intermediate_function_tables() {
    let v1 = intermediate_fn("v1").unwrap();
    let b = |i: i8| BasisIndex::new(i).unwrap();
    assert_eq!(*v1.at(b(2)), int(1));
    assert_eq!(*v1.at(b(1)), int(-1));
    let v3 = intermediate_fn("v3").unwrap();
    assert_eq!(*v3.at(b(2)), rat(2, 3));
    assert_eq!(*v3.at(b(4)), int(0));
    assert_eq!(*intermediate_fn("v5").unwrap().at(b(1)), rat(-1, 6));
    assert!(intermediate_fn("v9").is_err());
}

#[test]
fn v4_sequence() {
    let v4 = intermediate_fn("v4").unwrap();
    assert_eq!(lattice_at(&v4, &int(0)), l("L[1 0 0; 0 1 0]"));
    assert_eq!(lattice_at(&v4, &rat(1, 3)), l("L[1 0 1 | 1 ; 0 1 1 | 1]"));
    assert_eq!(lattice_at(&v4, &rat(2, 3)), l("L[1 1 1 | 1 ; 1 1 1 | 1]"));
    assert_eq!(lattice_at(&v4, &int(1)), l("L[2 1 1 | 1 ; 1 2 1 | 1]"));
    assert_eq!(lattice_at(&v4, &int(1)), lattice_at(&v4, &int(0)).scale(1));
}

#[test]
fn v5_sequence() {
    let v5 = intermediate_fn("v5").unwrap();
    let at = |r: Rational| lattice_at(&v5, &r);
    assert_eq!(at(int(0)), l("L[1 0 1; 0 1 0]"));
    assert_eq!(at(rat(1, 6)), l("L[1 0 1 | 1 ; 0 1 0 | 1]"));
    assert_eq!(at(rat(1, 3)), l("L[1 0 1 | 1 ; 1 1 1 | 1]"));
    assert_eq!(at(rat(1, 2)), l("L[1 1 1 | 1 ; 1 1 1 | 1]"));
    assert_eq!(at(rat(2, 3)), at(rat(1, 2)));
    assert_eq!(at(rat(5, 6)), l("L[1 1 1 | 1 ; 1 2 1 | 1]"));
    assert_eq!(at(int(1)), l("L[2 1 2 | 1 ; 1 2 1 | 1]"));
    assert_eq!(at(int(1)), at(int(0)).scale(1));
    assert_eq!(
        jumps(&v5),
        vec![int(0), rat(1, 6), rat(1, 3), rat(2, 3), rat(5, 6)]
    );
    assert_eq!(
        jumps(&intermediate_fn("v2").unwrap()),
        vec![int(0), rat(1, 2)]
    );
}

#[test]
fn valuation_examples() {
    let p = Prime::default();
    let v2 = intermediate_fn("v2").unwrap();
    assert!(valuation_of(&Octonion::zero(), &v2, p).is_infinite());
    let v3 = intermediate_fn("v3").unwrap();
    let x = Octonion::from_coords([
        int(1),
        int(1),
        p.pow(-1),
        int(1),
        p.pow(-1),
        int(1),
        p.pow(-1),
        int(1),
    ]);
    assert!(l("L[0 -1 0; -1 0 -1]").contains(&x, p));
    assert_eq!(valuation_of(&x, &v3, p).finite().unwrap(), rat(-2, 3));
}

#[test]
fn standard_functions_are_algebra_valuations() {
    let p = Prime::default();
    for (name, v) in standard_intermediate_fns() {
        let report = check_algebra_valuation(&v, p, 11, 300);
        assert!(report.passed(), "{name}: {report:?}");
    }
}

#[test]
fn a_large_shift_breaks_multiplicativity() {
    let mut values: [Rational; 8] = std::array::from_fn(|_| int(0));
    values[BasisIndex::new(1).unwrap().coord()] = int(5);
    let report = check_algebra_valuation(&IntermediateFn::new(values), Prime::default(), 1, 0);
    assert!(!report.multiplicativity.is_empty());
}

#[test]
fn torus_transport_of_the_standard_lattice() {
    let s = ExponentLattice::standard();
    assert_eq!(s.transport([1, -1, 0]).unwrap(), l("L[1 -1 0; -1 1 0]"));
    assert_eq!(s.transport([1, 0, -1]).unwrap(), l("L[1 0 -1; -1 0 1]"));
}

#[test]
fn product_matches_basis_product_oracle() {
    let samples = [
        "L[0 -1 0; -1 0 0]",
        "L[1 0 1 | 2 ; -3 1 0 | -1]",
        "L[2 -2 1 | 0 ; 0 1 -1 | 3]",
    ];
    for a in samples {
        for b in samples {
            let (la, lb) = (l(a), l(b));
            let mut oracle = [i64::MAX; 8];
            for i in BasisIndex::ALL {
                for j in BasisIndex::ALL {
                    let prod = &Octonion::<Rational>::basis(i) * &Octonion::basis(j);
                    for (k, c) in prod.coords().iter().enumerate() {
                        if *c != int(0) {
                            oracle[k] = oracle[k].min(la.exp(i.coord()) + lb.exp(j.coord()));
                        }
                    }
                }
            }
            assert_eq!(la.product(&lb).exps(), oracle, "{a} · {b}");
        }
    }
}
