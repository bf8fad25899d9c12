//! Trivial and normal extensions, the Galois groupoid, the fundamental group,
//! centralization, the Hopf formula for `H₂` and sections witnessing class 𝓔.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{axpy, zero_vector, Field, Matrix, Scalar, Subspace, SubspaceBuilder, Vector};
use crate::groups::{group_algebra, schur_multiplier, FinGroup, SchurMultiplier};
use crate::hopf_core::FinHopfAlgebra;
use crate::morphism::{
    factor_through, hopf_kernel, kernel_pair, pullback, CoalgebraMap, HopfMorphism, KernelPair,
};
use crate::subquot::{
    abelianization, algebra_closure, center, huq_commutator, quotient_by_normal, HopfSubalgebra,
    Quotient, Restricted,
};

/// A coalgebra section of `f`, when both sides are spanned by group-likes.
pub fn find_coalgebra_section(f: &HopfMorphism) -> Result<CoalgebraMap> {
    let (a, b) = (f.dom(), f.cod());
    let ga = a.grouplikes();
    let gb = b.grouplikes();
    if ga.len() != a.dim() || gb.len() != b.dim() {
        return Err(Error::NotInE);
    }
    let mut images = Vec::with_capacity(gb.len());
    for q in &gb {
        let pre = ga
            .iter()
            .find(|g| &f.apply(g) == q)
            .ok_or(Error::NotSurjective)?;
        images.push(pre.clone());
    }
    // express each basis vector of B in the group-like basis
    let basis_change = Matrix::from_columns(b.field(), b.dim(), &gb)
        .inverse()
        .ok_or(Error::NotInE)?;
    let s = Matrix::from_columns(a.field(), a.dim(), &images).mul(&basis_change);
    CoalgebraMap::new(b.clone(), a.clone(), s)
}

/// Summary of an extension `f: A → B`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionReport {
    #[serde(skip)]
    pub f: HopfMorphism,
    #[serde(skip)]
    pub kernel: HopfSubalgebra,
    pub kernel_dim: usize,
    pub kernel_grouplike_basis: Option<Vec<String>>,
    pub in_e: bool,
    pub is_surjective: bool,
    pub is_trivial_galois: bool,
    pub is_normal: bool,
}

pub fn extension_report(
    f: &HopfMorphism,
    section: Option<&CoalgebraMap>,
) -> Result<ExtensionReport> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let in_e = match section {
        Some(s) => s.is_section_of(f),
        None => find_coalgebra_section(f).is_ok(),
    };
    let kernel = hopf_kernel(f);
    let is_normal = is_normal_extension(f)?;
    let is_trivial_galois = is_trivial_extension_galois(f)?;
    Ok(ExtensionReport {
        f: f.clone(),
        kernel_dim: kernel.dim(),
        kernel_grouplike_basis: kernel.grouplike_labels(),
        kernel,
        in_e,
        is_surjective: true,
        is_trivial_galois,
        is_normal,
    })
}

/// `H₁(f): H₁(A) → H₁(B)` together with both unit maps.
pub struct AbelianizedMap {
    pub qa: Quotient,
    pub qb: Quotient,
    pub map: HopfMorphism,
}

pub fn abelianize_morphism(f: &HopfMorphism) -> Result<AbelianizedMap> {
    let qa = abelianization(f.dom())?;
    let qb = abelianization(f.cod())?;
    let map = factor_through(&qb.proj.compose(f)?, &qa)?;
    Ok(AbelianizedMap { qa, qb, map })
}

/// Whether the square formed by `f`, `H₁(f)` and the units is a pullback.
pub fn is_trivial_extension_galois(f: &HopfMorphism) -> Result<bool> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let ab = abelianize_morphism(f)?;
    let pb = pullback(&ab.qb.proj, &ab.map)?;
    let a = f.dom();
    if pb.algebra.dim() != a.dim() {
        return Ok(false);
    }
    // a ↦ f(a₁) ⊗ η_A(a₂)
    let (nb, nh) = (f.cod().dim(), ab.qa.algebra.dim());
    let columns: Vec<Vector> = (0..a.dim())
        .map(|x| {
            let mut t = zero_vector(a.field(), nb * nh);
            for (c, x1, x2) in a.comult_basis(x) {
                let (u, v) = (f.matrix().column(*x1), ab.qa.proj.matrix().column(*x2));
                for (i, s) in u.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                    for (j, r) in v.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                        t[i * nh + j] = &t[i * nh + j] + &(c * &(s * r));
                    }
                }
            }
            pb.sub
                .subspace()
                .coords(&t)
                .ok_or_else(|| Error::Inconsistent("comparison map leaves the pullback".into()))
        })
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(a.field(), pb.algebra.dim(), &columns).rank() == a.dim())
}

/// `Hker(f) ⊆ Z(A)`, cross-checked against `[Hker(f), A] = 𝕜1`.
pub fn is_normal_extension(f: &HopfMorphism) -> Result<bool> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let a = f.dom();
    let k = hopf_kernel(f);
    let central = k.subspace().is_subspace_of(center(a).subspace());
    let commutator_trivial = huq_commutator(&k, &HopfSubalgebra::whole(a.clone()))?.dim() == 1;
    if central != commutator_trivial {
        return Err(Error::Inconsistent(format!(
            "kernel central: {central}, commutator trivial: {commutator_trivial}"
        )));
    }
    Ok(central)
}

/// `ab` applied to the kernel pair of `f`.
#[derive(Clone, Debug)]
pub struct GaloisGroupoid {
    pub kernel_pair: KernelPair,
    pub objects: Quotient,
    pub arrows: Quotient,
    pub source: HopfMorphism,
    pub target: HopfMorphism,
    pub unit: HopfMorphism,
}

impl GaloisGroupoid {
    /// `source ∘ unit = target ∘ unit = id`, with commutative and cocommutative values.
    pub fn is_valid(&self) -> bool {
        let id = HopfMorphism::identity(&self.objects.algebra);
        let comm = |a: &FinHopfAlgebra| a.is_commutative() && a.is_cocommutative();
        self.source.compose(&self.unit).is_ok_and(|m| m == id)
            && self.target.compose(&self.unit).is_ok_and(|m| m == id)
            && comm(&self.objects.algebra)
            && comm(&self.arrows.algebra)
    }
}

pub fn galois_groupoid(f: &HopfMorphism) -> Result<GaloisGroupoid> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let kp = kernel_pair(f)?;
    let objects = abelianization(f.dom())?;
    let arrows = abelianization(kp.algebra())?;
    let source = factor_through(&objects.proj.compose(&kp.pullback.pi1)?, &arrows)?;
    let target = factor_through(&objects.proj.compose(&kp.pullback.pi2)?, &arrows)?;
    let unit = factor_through(&arrows.proj.compose(&kp.refl)?, &objects)?;
    Ok(GaloisGroupoid {
        kernel_pair: kp,
        objects,
        arrows,
        source,
        target,
        unit,
    })
}

fn require_section(f: &HopfMorphism, section: Option<&CoalgebraMap>) -> Result<()> {
    match section {
        Some(s) if s.is_section_of(f) => Ok(()),
        Some(_) => Err(Error::NotASection),
        None => find_coalgebra_section(f).map(|_| ()),
    }
}

/// `Hker(f) ∧ [A, A]` for a normal extension in 𝓔. Universality of `f` is the caller's claim.
pub fn pi1(f: &HopfMorphism, section: Option<&CoalgebraMap>) -> Result<Restricted> {
    if !is_normal_extension(f)? {
        return Err(Error::NotNormal);
    }
    require_section(f, section)?;
    let a = f.dom();
    let whole = HopfSubalgebra::whole(a.clone());
    let meet = hopf_kernel(f).meet(&huq_commutator(&whole, &whole)?)?;
    meet.restrict()
}

/// `x₁ y₁ S(x₂) S(y₂)` for basis elements `x`, `y`.
fn basis_commutator(a: &FinHopfAlgebra, x: usize, y: usize) -> Vector {
    let mut acc = a.zero();
    for (c, x1, x2) in a.comult_basis(x) {
        for (d, y1, y2) in a.comult_basis(y) {
            let p = a.mul_all(&[
                &a.basis(*x1),
                &a.basis(*y1),
                &a.antipode().column(*x2),
                &a.antipode().column(*y2),
            ]);
            axpy(&mut acc, &(c * d), &p);
        }
    }
    acc
}

/// The element description of `π₁`: the subalgebra generated by the commutators of
/// basis pairs `(a, b)` satisfying `b₁a₁ ⊗ f(a₂b₂S(a₃)S(b₃)) = ba ⊗ 1`.
pub fn pi1_from_elements(f: &HopfMorphism) -> Result<HopfSubalgebra> {
    let a = f.dom();
    let (n, m) = (a.dim(), f.cod().dim());
    let field = a.field();
    let mut gens = SubspaceBuilder::new(field, n);
    for x in 0..n {
        let dx = a.comul2(&a.basis(x));
        for y in 0..n {
            let dy = a.comul2(&a.basis(y));
            let mut lhs = zero_vector(field, n * m);
            for (c, x1, x2, x3) in &dx {
                for (d, y1, y2, y3) in &dy {
                    let left = a.mul(&a.basis(*y1), &a.basis(*x1));
                    let inner = a.mul_all(&[
                        &a.basis(*x2),
                        &a.basis(*y2),
                        &a.antipode().column(*x3),
                        &a.antipode().column(*y3),
                    ]);
                    let right = f.apply(&inner);
                    add_tensor(&mut lhs, &(c * d), &left, &right, m);
                }
            }
            let mut rhs = zero_vector(field, n * m);
            add_tensor(
                &mut rhs,
                &field.one(),
                &a.mul(&a.basis(y), &a.basis(x)),
                f.cod().unit(),
                m,
            );
            if lhs == rhs {
                gens.insert(&basis_commutator(a, x, y));
            }
        }
    }
    Ok(algebra_closure(a, &gens.finish()))
}

fn add_tensor(out: &mut [Scalar], c: &Scalar, u: &[Scalar], v: &[Scalar], m: usize) {
    for (i, s) in u.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
        let cs = c * s;
        for (j, r) in v.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
            out[i * m + j] = &out[i * m + j] + &(&cs * r);
        }
    }
}

/// `p` factored as `f ∘ π` with `π: A → A/A[Hker(p), A]⁺` and `f` a normal extension.
#[derive(Clone, Debug)]
pub struct Centralization {
    pub pi: Quotient,
    pub f: HopfMorphism,
}

pub fn centralize(p: &HopfMorphism) -> Result<Centralization> {
    if !p.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let a = p.dom();
    let c = huq_commutator(&hopf_kernel(p), &HopfSubalgebra::whole(a.clone()))?;
    let pi = quotient_by_normal(&c)?;
    let f = factor_through(p, &pi)?;
    if !is_normal_extension(&f)? {
        return Err(Error::Inconsistent(
            "centralized extension is not normal".into(),
        ));
    }
    Ok(Centralization { pi, f })
}

/// `(Hker(p) ∩ [P,P]) / (Hker(p) ∩ [P,P])[Hker(p), P]⁺` with the intermediate pieces.
#[derive(Clone, Debug)]
pub struct HopfFormula {
    pub numerator: HopfSubalgebra,
    pub relative_commutator: HopfSubalgebra,
    pub quotient: Quotient,
}

impl HopfFormula {
    pub fn algebra(&self) -> &Arc<FinHopfAlgebra> {
        &self.quotient.algebra
    }
}

/// Direct evaluation of the Hopf formula on a presentation with a coalgebra section.
pub fn h2_direct(p: &HopfMorphism, section: Option<&CoalgebraMap>) -> Result<HopfFormula> {
    if !p.is_surjective() {
        return Err(Error::NotSurjective);
    }
    require_section(p, section)?;
    let pa = p.dom();
    let whole = HopfSubalgebra::whole(pa.clone());
    let k = hopf_kernel(p);
    let numerator = k.meet(&huq_commutator(&whole, &whole)?)?;
    let relative_commutator = huq_commutator(&k, &whole)?;
    let inner = numerator.restrict()?;
    let coords: Vec<Vector> = relative_commutator
        .subspace()
        .basis_vectors()
        .map(|v| {
            numerator.subspace().coords(v).ok_or_else(|| {
                Error::Inconsistent("[Hker(p), P] is not inside Hker(p) ∩ [P, P]".into())
            })
        })
        .collect::<Result<_>>()?;
    let sub = HopfSubalgebra::from_subspace(
        inner.algebra.clone(),
        Subspace::span(pa.field(), inner.algebra.dim(), coords),
    );
    let quotient = quotient_by_normal(&sub)?;
    Ok(HopfFormula {
        numerator,
        relative_commutator,
        quotient,
    })
}

/// `𝕜[H₂(Q, ℤ)]` from the bar-resolution oracle.
pub fn h2_group(
    q: &FinGroup,
    field: Field,
    max_order: usize,
) -> Result<(FinHopfAlgebra, SchurMultiplier)> {
    let m = schur_multiplier(q, max_order)?;
    Ok((group_algebra(&m.invariants.to_group(), field), m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum H2Backend {
    Direct,
    Group,
}

/// Dimension and invariant factors of the group of group-likes, when they span.
pub fn grouplike_invariants(a: &FinHopfAlgebra) -> Option<(usize, Vec<u64>)> {
    let (g, _) = FinGroup::from_grouplikes(a)?;
    (g.order() == a.dim()).then(|| (a.dim(), g.abelianization_invariants().invariant_factors))
}

/// Section of `g ∘ f` from sections of `f: A → B` and `g: B → C`.
pub fn compose_sections(s_f: &CoalgebraMap, s_g: &CoalgebraMap) -> Result<CoalgebraMap> {
    s_f.compose(s_g)
}

/// For `f: A → C` with section `s` and any `g: B → C`, the pullback projection
/// `A ×_C B → B` has the section `b ↦ s(g(b₁)) ⊗ b₂`. Returns the pullback leg and section.
pub fn pullback_section(
    f: &HopfMorphism,
    s: &CoalgebraMap,
    g: &HopfMorphism,
) -> Result<(HopfMorphism, CoalgebraMap)> {
    if !s.is_section_of(f) {
        return Err(Error::NotASection);
    }
    let pb = pullback(f, g)?;
    let (a, b) = (f.dom(), g.dom());
    let nb = b.dim();
    let columns: Vec<Vector> = (0..nb)
        .map(|y| {
            let mut t = zero_vector(a.field(), a.dim() * nb);
            for (c, y1, y2) in b.comult_basis(y) {
                let left = s.apply(&g.matrix().column(*y1));
                add_tensor(&mut t, c, &left, &b.basis(*y2), nb);
            }
            pb.sub.subspace().coords(&t).ok_or_else(|| {
                Error::Inconsistent("constructed section leaves the pullback".into())
            })
        })
        .collect::<Result<_>>()?;
    let sec = CoalgebraMap::new(
        b.clone(),
        pb.algebra.clone(),
        Matrix::from_columns(a.field(), pb.algebra.dim(), &columns),
    )?;
    if !sec.is_section_of(&pb.pi2) {
        return Err(Error::Inconsistent(
            "constructed map does not split the pullback leg".into(),
        ));
    }
    Ok((pb.pi2, sec))
}

/// If `g ∘ f` has section `t`, then `f ∘ t` splits `g`.
pub fn right_divisibility_section(
    f: &HopfMorphism,
    g: &HopfMorphism,
    t: &CoalgebraMap,
) -> Result<CoalgebraMap> {
    if !t.is_section_of(&g.compose(f)?) {
        return Err(Error::NotASection);
    }
    let sec = f.to_coalgebra_map().compose(t)?;
    if !sec.is_section_of(g) {
        return Err(Error::Inconsistent("f ∘ t does not split g".into()));
    }
    Ok(sec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{GroupHom, DEFAULT_MAX_ORDER};

    const Q: Field = Field::Rational;

    fn ga(g: &FinGroup) -> Arc<FinHopfAlgebra> {
        Arc::new(group_algebra(g, Q))
    }

    fn lin(phi: &GroupHom) -> HopfMorphism {
        phi.linearize(&ga(phi.dom()), &ga(phi.cod())).unwrap()
    }

    fn q8_v4() -> HopfMorphism {
        lin(&GroupHom::quaternion_to_klein())
    }

    fn sign() -> HopfMorphism {
        let s3 = Arc::new(FinGroup::symmetric3());
        let c2 = Arc::new(FinGroup::cyclic(2));
        let images = (0..6)
            .map(|x| usize::from(s3.element_order(x) == 2))
            .collect();
        lin(&GroupHom::new(s3, c2, images).unwrap())
    }

    fn d4_v4() -> HopfMorphism {
        let d4 = Arc::new(FinGroup::dihedral(4));
        let v4 = Arc::new(FinGroup::klein_four());
        // r ↦ a, s ↦ b
        let r = d4.element_by_label("r").unwrap();
        let s = d4.element_by_label("s").unwrap();
        lin(&GroupHom::from_generators(d4, v4, &[(r, 1), (s, 2)]).unwrap())
    }

    #[test]
    fn normality() {
        assert!(is_normal_extension(&q8_v4()).unwrap());
        assert!(!is_normal_extension(&sign()).unwrap());
        let a = ga(&FinGroup::symmetric3());
        assert!(is_normal_extension(&HopfMorphism::identity(&a)).unwrap());
        let k = Arc::new(FinHopfAlgebra::base_field(Q));
        let inj = HopfMorphism::trivial(&k, &a);
        assert_eq!(is_normal_extension(&inj).unwrap_err(), Error::NotSurjective);
    }

    #[test]
    fn trivial_extensions() {
        let c2 = Arc::new(FinGroup::cyclic(2));
        let v = Arc::new(FinGroup::direct_product(&c2, &c2));
        let proj = lin(&GroupHom::new(v, c2, vec![0, 1, 0, 1]).unwrap());
        assert!(is_trivial_extension_galois(&proj).unwrap());
        assert!(!is_trivial_extension_galois(&q8_v4()).unwrap());
        let a = ga(&FinGroup::quaternion());
        assert!(is_trivial_extension_galois(&HopfMorphism::identity(&a)).unwrap());
        let r = extension_report(&q8_v4(), None).unwrap();
        assert!(r.in_e && r.is_normal && !r.is_trivial_galois);
        assert_eq!(r.kernel_dim, 2);
    }

    #[test]
    fn groupoids() {
        let g = galois_groupoid(&q8_v4()).unwrap();
        assert_eq!(g.kernel_pair.algebra().dim(), 16);
        assert!(g.is_valid());
        assert_eq!(g.objects.algebra.dim(), 4);

        let a = ga(&FinGroup::symmetric3());
        let id = galois_groupoid(&HopfMorphism::identity(&a)).unwrap();
        assert!(id.is_valid());
        assert_eq!(id.arrows.algebra.dim(), id.objects.algebra.dim());
        assert!(id.source.is_isomorphism());

        let k = Arc::new(FinHopfAlgebra::base_field(Q));
        let pair = galois_groupoid(&HopfMorphism::trivial(&a, &k)).unwrap();
        assert!(pair.is_valid());
        assert_eq!(pair.arrows.algebra.dim(), 4);
    }

    #[test]
    fn fundamental_group() {
        for f in [q8_v4(), d4_v4()] {
            let p = pi1(&f, None).unwrap();
            assert_eq!(grouplike_invariants(&p.algebra), Some((2, vec![2])));
            let elements = pi1_from_elements(&f).unwrap();
            let n = f.dom().dim();
            let meet = Subspace::span(
                Q,
                n,
                (0..p.algebra.dim()).map(|k| p.inclusion.matrix().column(k)),
            );
            assert_eq!(elements.subspace(), &meet);
        }
        let c4 = ga(&FinGroup::cyclic(4));
        assert_eq!(
            pi1(&HopfMorphism::identity(&c4), None)
                .unwrap()
                .algebra
                .dim(),
            1
        );
        assert_eq!(pi1(&sign(), None).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn centralization() {
        let c = centralize(&sign()).unwrap();
        assert_eq!(c.pi.algebra.dim(), 2);
        assert!(c.f.is_isomorphism());
        let c = centralize(&q8_v4()).unwrap();
        assert_eq!(c.pi.algebra.dim(), 8);
    }

    #[test]
    fn hopf_formula_backends() {
        let direct = h2_direct(&q8_v4(), None).unwrap();
        let (group, _) = h2_group(&FinGroup::klein_four(), Q, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(
            grouplike_invariants(direct.algebra()),
            grouplike_invariants(&group)
        );
        assert_eq!(direct.algebra().dim(), 2);
        let c3 = ga(&FinGroup::cyclic(3));
        assert_eq!(
            h2_direct(&HopfMorphism::identity(&c3), None)
                .unwrap()
                .algebra()
                .dim(),
            1
        );
        let s = h2_direct(&sign(), None).unwrap();
        assert_eq!(s.numerator.dim(), 3);
        assert_eq!(s.relative_commutator.dim(), 3);
    }

    #[test]
    fn class_e_sections() {
        // C₄ → C₂ → 1 composed
        let c4 = Arc::new(FinGroup::cyclic(4));
        let c2 = Arc::new(FinGroup::cyclic(2));
        let f = lin(&GroupHom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap());
        let k = Arc::new(FinHopfAlgebra::base_field(Q));
        let g = HopfMorphism::trivial(f.cod(), &k);
        let s_f = find_coalgebra_section(&f).unwrap();
        let s_g = find_coalgebra_section(&g).unwrap();
        let s = compose_sections(&s_f, &s_g).unwrap();
        assert!(s.is_section_of(&g.compose(&f).unwrap()));
        let (leg, sec) = pullback_section(&f, &s_f, &HopfMorphism::identity(f.cod())).unwrap();
        assert!(sec.is_section_of(&leg));
        let t = find_coalgebra_section(&g.compose(&f).unwrap()).unwrap();
        assert!(right_divisibility_section(&f, &g, &t)
            .unwrap()
            .is_section_of(&g));
    }
}
