use std::sync::Arc;

use hopfkit::cleft::{analyze_cleft, canonical_map_check, is_trivial_extension};
use hopfkit::exact_seq::{five_term, five_term_with_section};
use hopfkit::exactla::Field;
use hopfkit::galois::{
    galois_groupoid, grouplike_invariants, h2_direct, is_normal_extension,
    is_trivial_extension_galois, pi1, pi1_from_elements,
};
use hopfkit::groups::linearize_section;
use hopfkit::groups::schur_multiplier_oracle;
use hopfkit::{group_algebra, zoo, FinGroup, FinHopfAlgebra, GroupHom, HopfMorphism, Subspace};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;

fn linearized(phi: &GroupHom) -> (Arc<FinHopfAlgebra>, Arc<FinHopfAlgebra>, HopfMorphism) {
    let a = Arc::new(group_algebra(phi.dom(), Q));
    let b = Arc::new(group_algebra(phi.cod(), Q));
    let f = phi.linearize(&a, &b).unwrap();
    (a, b, f)
}

#[test]
fn every_section_gives_a_crossed_product_isomorphism() {
    for (name, phi) in zoo::extensions() {
        let (a, b, f) = linearized(&phi);
        let sections = phi.set_sections(48);
        assert!(!sections.is_empty(), "{name}");
        for s in sections {
            let i = linearize_section(&phi, &s, &a, &b).unwrap();
            let d = analyze_cleft(&f, &i).unwrap();
            assert_eq!(d.crossed.algebra.dim(), phi.dom().order(), "{name}");
            assert!(d.psi.is_isomorphism(), "{name}");
            assert!(d.psi_inv.mul(d.psi.matrix()).is_identity(), "{name}");
            assert!(canonical_map_check(&d).passed(), "{name}");
        }
    }
}

#[test]
fn analyzing_a_crossed_product_recovers_its_data() {
    for (name, phi) in zoo::extensions() {
        let (a, b, f) = linearized(&phi);
        let s = phi.set_sections(1).pop().unwrap();
        let d = analyze_cleft(&f, &linearize_section(&phi, &s, &a, &b).unwrap()).unwrap();
        let again = analyze_cleft(&d.crossed.pi_h, &d.crossed.i_h).unwrap();
        assert_eq!(again.action.matrix(), d.action.matrix(), "{name}");
        assert_eq!(again.cocycle.matrix(), d.cocycle.matrix(), "{name}");
        assert!(
            is_trivial_extension(&again) == is_trivial_extension(&d),
            "{name}"
        );
    }
}

#[test]
fn trivial_extensions_are_normal() {
    let mut trivial = 0;
    for (name, phi) in zoo::extensions() {
        let (_, _, f) = linearized(&phi);
        let t = is_trivial_extension_galois(&f).unwrap();
        let n = is_normal_extension(&f).unwrap();
        assert!(!t || n, "{name}");
        // brute force: kernel central in the group
        let center = phi.dom().center();
        assert_eq!(n, phi.kernel().iter().all(|k| center.contains(k)), "{name}");
        trivial += t as usize;
        assert!(galois_groupoid(&f).unwrap().is_valid(), "{name}");
    }
    assert!(trivial > 0);
}

#[test]
fn fundamental_group_does_not_depend_on_the_section() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, phi) in zoo::extensions() {
        let (a, b, f) = linearized(&phi);
        if !is_normal_extension(&f).unwrap() {
            continue;
        }
        let mut sections = phi.set_sections(usize::MAX);
        sections.shuffle(&mut rng);
        let spans: Vec<Subspace> = sections
            .iter()
            .take(3)
            .map(|s| {
                let i = linearize_section(&phi, s, &a, &b).unwrap();
                let r = pi1(&f, Some(&i)).unwrap();
                let m = r.inclusion.matrix();
                Subspace::span(Q, a.dim(), (0..m.cols()).map(|c| m.column(c)))
            })
            .collect();
        assert!(spans.windows(2).all(|w| w[0] == w[1]), "{name}");
        let elementwise = pi1_from_elements(&f).unwrap();
        assert_eq!(elementwise.subspace(), &spans[0], "{name}");
    }
}

#[test]
fn hopf_formula_matches_bar_resolution() {
    let mut cases: Vec<(String, GroupHom)> = vec![
        ("Q8->C2xC2".into(), zoo::q8_to_v4()),
        ("D4->C2xC2".into(), zoo::d4_to_v4()),
    ];
    for n in [2, 3, 4, 6] {
        cases.push((
            format!("C{n}"),
            GroupHom::identity(&Arc::new(FinGroup::cyclic(n))),
        ));
    }
    for (name, phi) in cases {
        let (a, b, f) = linearized(&phi);
        let s = phi.set_sections(1).pop().unwrap();
        let i = linearize_section(&phi, &s, &a, &b).unwrap();
        let formula = h2_direct(&f, Some(&i)).unwrap();
        let (dim, factors) = grouplike_invariants(formula.algebra()).unwrap();
        let oracle = schur_multiplier_oracle(phi.cod()).unwrap();
        assert_eq!(dim as u64, oracle.order(), "{name}");
        assert_eq!(factors, oracle.invariant_factors, "{name}");
    }
}

#[test]
fn five_term_sequences_are_exact() {
    for (name, phi) in zoo::extensions() {
        let ft = five_term(&phi, Q, 16).unwrap();
        let r = ft.sequence.check_exactness();
        assert!(r.is_complex(), "{name}");
        assert!(r.all_exact(), "{name}: {:?}", r.failing());
        assert!(r.final_surjective, "{name}");
    }
}

#[test]
fn connecting_map_does_not_depend_on_the_section() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, phi) in zoo::extensions() {
        let mut sections = phi.set_sections(usize::MAX);
        sections.shuffle(&mut rng);
        let maps: Vec<_> = sections
            .into_iter()
            .take(2)
            .map(|s| {
                five_term_with_section(&phi, Q, 16, Some(s))
                    .unwrap()
                    .connecting_map()
                    .matrix()
                    .clone()
            })
            .collect();
        assert!(maps.windows(2).all(|w| w[0] == w[1]), "{name}");
    }
}
