use std::sync::Arc;

use hopfkit::exactla::Field;
use hopfkit::morphism::{
    convolution, convolution_unit, hopf_kernel, induced_on_quotient, CoalgebraMap,
};
use hopfkit::subquot::{center, huq_commutator, quotient_by_normal, HopfSubalgebra};
use hopfkit::{group_algebra, zoo, FinGroup, FinHopfAlgebra, Matrix, Subspace};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn ga(g: &FinGroup) -> Arc<FinHopfAlgebra> {
    Arc::new(group_algebra(g, Q))
}

/// Span of the group elements in `elems` inside `k[G]`.
fn span_of(a: &FinHopfAlgebra, elems: &[usize]) -> Subspace {
    Subspace::span(Q, a.dim(), elems.iter().map(|&g| a.basis(g)))
}

fn normal_subgroups(g: &FinGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let h = g.subgroup_generated(&[x, y]);
            if g.is_normal_subgroup(&h) && !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}

#[test]
fn zoo_axioms_over_both_fields() {
    for field in [Q, Field::prime(2).unwrap()] {
        for (name, a) in zoo::algebras(field) {
            let r = a.verify_axioms();
            assert!(r.is_hopf(), "{name} over {field}: {:?}", r);
            assert!(a.is_cocommutative());
            assert!(a.antipode().mul(a.antipode()).is_identity(), "{name}");
        }
    }
}

#[test]
fn grouplikes_are_the_group() {
    for (name, g) in zoo::groups() {
        let a = ga(&g);
        let gl = a.grouplikes();
        assert_eq!(gl.len(), g.order(), "{name}");
        for x in &gl {
            for y in &gl {
                assert!(gl.contains(&a.mul(x, y)));
            }
        }
    }
}

#[test]
fn kernels_are_normal_and_match_groups() {
    for (name, phi) in zoo::extensions() {
        let (a, b) = (ga(phi.dom()), ga(phi.cod()));
        let f = phi.linearize(&a, &b).unwrap();
        let k = hopf_kernel(&f);
        assert!(k.is_hopf_subalgebra() && k.is_normal(), "{name}");
        assert_eq!(k.subspace(), &span_of(&a, &phi.kernel()), "{name}");
        // dom / dom·Hker(f)⁺ ≅ cod
        let q = quotient_by_normal(&k).unwrap();
        assert_eq!(q.algebra.dim(), b.dim(), "{name}");
        assert!(
            induced_on_quotient(&f, &k).unwrap().is_isomorphism(),
            "{name}"
        );
        assert_eq!(a.dim(), k.dim() * q.algebra.dim());
    }
}

#[test]
fn commutators_match_brute_force() {
    for (name, g) in zoo::groups() {
        let a = ga(&g);
        let whole = HopfSubalgebra::whole(a.clone());
        let d = huq_commutator(&whole, &whole).unwrap();
        assert_eq!(d.subspace(), &span_of(&a, &g.derived_subgroup()), "{name}");
        assert_eq!(d.dim() == 1, a.verify_axioms().commutative, "{name}");
        // center of k[G] has dimension = number of conjugacy classes; group-like part is Z(G)
        let z = center(&a);
        let z_group = span_of(&a, &g.center());
        assert!(z_group.is_subspace_of(z.subspace()), "{name}");
        assert_eq!(z.is_hopf_subalgebra(), g.is_abelian(), "{name}");
    }
}

#[test]
fn commutator_is_symmetric_on_normal_subalgebras() {
    for (name, g) in zoo::groups() {
        let a = ga(&g);
        let subs: Vec<HopfSubalgebra> = normal_subgroups(&g)
            .iter()
            .map(|h| HopfSubalgebra::from_subspace(a.clone(), span_of(&a, h)))
            .collect();
        for x in &subs {
            assert!(x.is_normal(), "{name}");
            for y in &subs {
                let xy = huq_commutator(x, y).unwrap();
                let yx = huq_commutator(y, x).unwrap();
                assert_eq!(xy.subspace(), yx.subspace(), "{name}");
            }
        }
    }
}

#[test]
fn central_kernel_iff_trivial_commutator() {
    for (name, phi) in zoo::extensions() {
        let (a, b) = (ga(phi.dom()), ga(phi.cod()));
        let f = phi.linearize(&a, &b).unwrap();
        let k = hopf_kernel(&f);
        let central = k.subspace().is_subspace_of(center(&a).subspace());
        let trivial = huq_commutator(&k, &HopfSubalgebra::whole(a.clone()))
            .unwrap()
            .dim()
            == 1;
        assert_eq!(central, trivial, "{name}");
    }
}

#[test]
fn surjections_preserve_derived_subalgebras() {
    for (name, phi) in zoo::extensions() {
        let (a, b) = (ga(phi.dom()), ga(phi.cod()));
        let f = phi.linearize(&a, &b).unwrap();
        let wa = HopfSubalgebra::whole(a.clone());
        let wb = HopfSubalgebra::whole(b.clone());
        let da = huq_commutator(&wa, &wa).unwrap();
        let db = huq_commutator(&wb, &wb).unwrap();
        let pushed = Subspace::span(
            Q,
            b.dim(),
            da.subspace().basis_vectors().map(|v| f.apply(v)),
        );
        assert_eq!(&pushed, db.subspace(), "{name}");
    }
}

fn set_map_matrix(rows: usize, images: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(Q, rows, images.len());
    for (j, &i) in images.iter().enumerate() {
        m[(i, j)] = Q.one();
    }
    m
}

proptest! {
    #[test]
    fn convolution_is_associative_and_unital(
        f in prop::collection::vec(0usize..8, 4),
        g in prop::collection::vec(0usize..8, 4),
        h in prop::collection::vec(0usize..8, 4),
    ) {
        // coalgebra maps k[C₂×C₂] → k[Q₈] are linearized set maps
        let c = ga(&FinGroup::klein_four());
        let a = ga(&FinGroup::quaternion());
        let [f, g, h] = [&f, &g, &h].map(|x| set_map_matrix(8, x));
        for m in [&f, &g, &h] {
            prop_assert!(CoalgebraMap::new(c.clone(), a.clone(), m.clone()).is_ok());
        }
        let left = convolution(&c, &a, &convolution(&c, &a, &f, &g), &h);
        let right = convolution(&c, &a, &f, &convolution(&c, &a, &g, &h));
        prop_assert_eq!(left, right);
        let u = convolution_unit(&c, &a);
        prop_assert_eq!(convolution(&c, &a, &u, &f), f.clone());
        prop_assert_eq!(convolution(&c, &a, &f, &u), f);
    }
}
