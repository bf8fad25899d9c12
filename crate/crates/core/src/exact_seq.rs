//! Sequences of Hopf morphisms, exactness checking, the four-object sequence of a
//! presentation and the five-term homology sequence of an extension.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace, Vector};
use crate::galois::{h2_direct, HopfFormula};
use crate::groups::{
    group_algebra, h2_induced_map, transgression, CentralExtensionModel, GroupHom, H2Map,
    SchurMultiplier,
};
use crate::hopf_core::FinHopfAlgebra;
use crate::morphism::{factor_through, hopf_kernel, image, same_algebra, HopfMorphism};
use crate::subquot::{
    abelianization, huq_commutator, quotient_by_normal, HopfSubalgebra, Quotient, Restricted,
};

/// Nodes joined by morphisms `maps[i]: nodes[i] → nodes[i + 1]`.
#[derive(Clone, Debug)]
pub struct HopfSequence {
    names: Vec<String>,
    maps: Vec<HopfMorphism>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeReport {
    pub name: String,
    pub dim: usize,
    /// Incoming composite with the outgoing map is `u ∘ ε`.
    pub complex: bool,
    pub image_dim: usize,
    pub kernel_dim: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    /// Internal nodes only.
    pub nodes: Vec<NodeReport>,
    /// The last map is surjective.
    pub final_surjective: bool,
}

impl ExactnessReport {
    pub fn is_complex(&self) -> bool {
        self.nodes.iter().all(|n| n.complex)
    }

    pub fn all_exact(&self) -> bool {
        self.nodes.iter().all(|n| n.exact) && self.final_surjective
    }

    /// Names of internal nodes where exactness fails.
    pub fn failing(&self) -> Vec<&str> {
        self.nodes
            .iter()
            .filter(|n| !n.exact)
            .map(|n| n.name.as_str())
            .collect()
    }
}

impl HopfSequence {
    pub fn new(names: Vec<String>, maps: Vec<HopfMorphism>) -> Result<Self> {
        if names.len() != maps.len() + 1 || maps.is_empty() {
            return Err(Error::NotComposable(
                "need one more node name than maps".into(),
            ));
        }
        for (i, w) in maps.windows(2).enumerate() {
            if !same_algebra(w[0].cod(), w[1].dom()) {
                return Err(Error::NotComposable(format!(
                    "maps {i} and {} do not compose",
                    i + 1
                )));
            }
        }
        Ok(HopfSequence { names, maps })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn maps(&self) -> &[HopfMorphism] {
        &self.maps
    }

    pub fn node(&self, i: usize) -> &Arc<FinHopfAlgebra> {
        if i == 0 {
            self.maps[0].dom()
        } else {
            self.maps[i - 1].cod()
        }
    }

    /// Replaces one map by an arbitrary matrix of the same shape, skipping all checks.
    pub fn with_matrix(&self, i: usize, matrix: Matrix) -> Result<HopfSequence> {
        let old = &self.maps[i];
        let mut maps = self.maps.clone();
        maps[i] = HopfMorphism::new_unchecked(old.dom().clone(), old.cod().clone(), matrix)?;
        Ok(HopfSequence {
            names: self.names.clone(),
            maps,
        })
    }

    /// At each internal node: `image(incoming) = Hker(outgoing)`.
    pub fn check_exactness(&self) -> ExactnessReport {
        let nodes = (1..self.maps.len())
            .map(|i| {
                let (g, h) = (&self.maps[i - 1], &self.maps[i]);
                let im = image(g);
                let ker = hopf_kernel(h);
                let composite = h.compose(g).expect("composable by construction");
                NodeReport {
                    name: self.names[i].clone(),
                    dim: self.node(i).dim(),
                    complex: composite.is_trivial(),
                    image_dim: im.dim(),
                    kernel_dim: ker.dim(),
                    exact: im.subspace() == ker.subspace(),
                }
            })
            .collect();
        ExactnessReport {
            nodes,
            final_surjective: self.maps.last().expect("nonempty").is_surjective(),
        }
    }
}

fn base_field(field: Field) -> Arc<FinHopfAlgebra> {
    Arc::new(FinHopfAlgebra::base_field(field))
}

/// The subalgebra `s ⊆ outer.parent` expressed inside the restricted algebra `outer`.
fn inside(
    sub: &HopfSubalgebra,
    outer: &HopfSubalgebra,
    outer_alg: &Restricted,
) -> Result<HopfSubalgebra> {
    let coords: Vec<Vector> = sub
        .subspace()
        .basis_vectors()
        .map(|v| {
            outer.subspace().coords(v).ok_or_else(|| {
                Error::Inconsistent("subalgebra is not contained in its ambient piece".into())
            })
        })
        .collect::<Result<_>>()?;
    let alg = &outer_alg.algebra;
    Ok(HopfSubalgebra::from_subspace(
        alg.clone(),
        Subspace::span(alg.field(), alg.dim(), coords),
    ))
}

/// `𝕜 → H₂(B) → [P,P]/[P,P][Hker(p),P]⁺ → B → H₁(B) → 𝕜` for a presentation `p: P → B`.
#[derive(Clone, Debug)]
pub struct LemmaSequence {
    pub sequence: HopfSequence,
    pub h2: HopfFormula,
    pub middle: Quotient,
}

pub fn lemma_ss_sequence(p: &HopfMorphism) -> Result<LemmaSequence> {
    let h2 = h2_direct(p, None)?;
    let pa = p.dom();
    let field = pa.field();
    let whole = HopfSubalgebra::whole(pa.clone());
    let derived = huq_commutator(&whole, &whole)?;
    let derived_alg = derived.restrict()?;
    let rel = inside(&h2.relative_commutator, &derived, &derived_alg)?;
    let middle = quotient_by_normal(&rel)?;

    // H₂(B) → middle, induced by Hker(p) ∩ [P,P] ⊆ [P,P]
    let numerator = h2.numerator.restrict()?;
    let num_in_derived: Vec<Vector> = (0..numerator.algebra.dim())
        .map(|k| {
            derived
                .subspace()
                .coords(&numerator.inclusion.matrix().column(k))
                .ok_or_else(|| Error::Inconsistent("numerator is not inside [P, P]".into()))
        })
        .collect::<Result<_>>()?;
    let incl = HopfMorphism::new(
        numerator.algebra.clone(),
        derived_alg.algebra.clone(),
        Matrix::from_columns(field, derived_alg.algebra.dim(), &num_in_derived),
    )?;
    let h2_to_mid = factor_through(&middle.proj.compose(&incl)?, &h2.quotient)?;
    let mid_to_b = factor_through(&p.compose(&derived_alg.inclusion)?, &middle)?;
    let eta = abelianization(p.cod())?;
    let k = base_field(field);
    let maps = vec![
        HopfMorphism::trivial(&k, h2.algebra()),
        h2_to_mid,
        mid_to_b,
        eta.proj.clone(),
        HopfMorphism::trivial(&eta.algebra, &k),
    ];
    let names = ["k", "H2(B)", "[P,P]/[P,P][Hker,P]+", "B", "H1(B)", "k"];
    Ok(LemmaSequence {
        sequence: HopfSequence::new(names.iter().map(|s| s.to_string()).collect(), maps)?,
        h2,
        middle,
    })
}

/// `H₂(A) → H₂(B) → Hker(f)/Hker(f)[Hker(f),A]⁺ → H₁(A) → H₁(B) → 𝕜` for
/// `f = 𝕜[φ]`, with `H₂` from the bar-resolution oracle and the connecting map
/// given by transgression.
#[derive(Clone, Debug)]
pub struct FiveTerm {
    pub sequence: HopfSequence,
    pub ext: CentralExtensionModel,
    pub f: HopfMorphism,
    pub h2_map: H2Map,
    pub kernel: HopfSubalgebra,
    pub kernel_alg: Restricted,
    pub middle: Quotient,
    pub h1_dom: Quotient,
    pub h1_cod: Quotient,
    /// Set section used for the connecting map.
    pub section: Vec<usize>,
}

fn decode(index: usize, factors: &[u64]) -> Vec<u64> {
    let mut c = vec![0; factors.len()];
    let mut i = index as u64;
    for (k, &d) in factors.iter().enumerate().rev() {
        c[k] = i % d;
        i /= d;
    }
    c
}

fn h2_algebra(m: &SchurMultiplier, field: Field) -> Arc<FinHopfAlgebra> {
    Arc::new(group_algebra(&m.invariants.to_group(), field))
}

/// `𝕜[H₂(φ)]` between the group algebras of the two oracle groups.
fn h2_morphism(
    map: &H2Map,
    dom: &Arc<FinHopfAlgebra>,
    cod: &Arc<FinHopfAlgebra>,
) -> Result<HopfMorphism> {
    let field = dom.field();
    let columns: Vec<Vector> = (0..dom.dim())
        .map(|x| {
            let c = decode(x, &map.dom.invariants.invariant_factors);
            cod.basis(map.cod.class_index(&map.apply(&c)))
        })
        .collect();
    HopfMorphism::new(
        dom.clone(),
        cod.clone(),
        Matrix::from_columns(field, cod.dim(), &columns),
    )
}

pub fn five_term(phi: &GroupHom, field: Field, max_order: usize) -> Result<FiveTerm> {
    five_term_with_section(phi, field, max_order, None)
}

pub fn five_term_with_section(
    phi: &GroupHom,
    field: Field,
    max_order: usize,
    section: Option<Vec<usize>>,
) -> Result<FiveTerm> {
    let ext = CentralExtensionModel::new(phi.clone())?;
    let (a, b) = (
        Arc::new(group_algebra(phi.dom(), field)),
        Arc::new(group_algebra(phi.cod(), field)),
    );
    let f = phi.linearize(&a, &b)?;
    let h2_map = h2_induced_map(phi, max_order)?;
    let (h2a, h2b) = (
        h2_algebra(&h2_map.dom, field),
        h2_algebra(&h2_map.cod, field),
    );
    let h2f = h2_morphism(&h2_map, &h2a, &h2b)?;

    let kernel = hopf_kernel(&f);
    let kernel_alg = kernel.restrict()?;
    let rel = huq_commutator(&kernel, &HopfSubalgebra::whole(a.clone()))?;
    let middle = quotient_by_normal(&inside(&rel, &kernel, &kernel_alg)?)?;

    let section = match section {
        Some(s) => s,
        None => phi.set_sections(1).pop().ok_or(Error::NotSurjective)?,
    };
    let gens = &h2_map.cod.generators;
    let factors = &h2_map.cod.invariants.invariant_factors;
    let delta_cols: Vec<Vector> = (0..h2b.dim())
        .map(|x| {
            let c = decode(x, factors);
            let mut z = vec![0i64; gens.first().map_or(0, |g| g.len())];
            for (coef, g) in c.iter().zip(gens) {
                for (zi, gi) in z.iter_mut().zip(g) {
                    *zi += *coef as i64 * gi;
                }
            }
            let n = if z.is_empty() {
                phi.dom().identity()
            } else {
                transgression(&ext, &z, &section)?
            };
            let in_k = kernel.subspace().coords(&a.basis(n)).ok_or_else(|| {
                Error::Inconsistent("transgression value is outside the kernel".into())
            })?;
            Ok(middle.proj.apply(&in_k))
        })
        .collect::<Result<_>>()?;
    let delta = HopfMorphism::new(
        h2b.clone(),
        middle.algebra.clone(),
        Matrix::from_columns(field, middle.algebra.dim(), &delta_cols),
    )?;

    let h1_dom = abelianization(&a)?;
    let h1_cod = abelianization(&b)?;
    let mid_to_h1 = factor_through(&h1_dom.proj.compose(&kernel_alg.inclusion)?, &middle)?;
    let h1f = factor_through(&h1_cod.proj.compose(&f)?, &h1_dom)?;
    let k = base_field(field);
    let maps = vec![
        h2f,
        delta,
        mid_to_h1,
        h1f.clone(),
        HopfMorphism::trivial(&h1_cod.algebra, &k),
    ];
    let names = [
        "H2(A)",
        "H2(B)",
        "Hker/Hker[Hker,A]+",
        "H1(A)",
        "H1(B)",
        "k",
    ];
    Ok(FiveTerm {
        sequence: HopfSequence::new(names.iter().map(|s| s.to_string()).collect(), maps)?,
        ext,
        f,
        h2_map,
        kernel,
        kernel_alg,
        middle,
        h1_dom,
        h1_cod,
        section,
    })
}

impl FiveTerm {
    /// The connecting map `H₂(B) → Hker/Hker[Hker,A]⁺`.
    pub fn connecting_map(&self) -> &HopfMorphism {
        &self.sequence.maps()[1]
    }

    /// The same sequence with two columns of `H₁(A) → H₁(B)` exchanged.
    pub fn corrupted(&self, col_a: usize, col_b: usize) -> Result<HopfSequence> {
        let mut m = self.sequence.maps()[3].matrix().clone();
        m.swap_columns(col_a, col_b);
        self.sequence.with_matrix(3, m)
    }
}

/// Square-by-square commutation for a morphism of extensions
/// `(α, β): (φ: G → Q) → (φ': G' → Q')` with `φ' ∘ α = β ∘ φ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    pub squares: Vec<bool>,
}

impl NaturalityReport {
    pub fn commutes(&self) -> bool {
        self.squares.iter().all(|&s| s)
    }
}

pub fn naturality(
    upper: &FiveTerm,
    lower: &FiveTerm,
    alpha: &GroupHom,
    beta: &GroupHom,
    max_order: usize,
) -> Result<NaturalityReport> {
    let lhs = lower.ext.phi.compose(alpha)?;
    let rhs = beta.compose(&upper.ext.phi)?;
    if lhs != rhs {
        return Err(Error::NotComposable(
            "the pair of group maps is not a morphism of extensions".into(),
        ));
    }
    let field = upper.f.dom().field();
    let (up, low) = (&upper.sequence, &lower.sequence);
    // vertical maps at each node
    let v0 = h2_morphism(&h2_induced_map(alpha, max_order)?, up.node(0), low.node(0))?;
    let v1 = h2_morphism(&h2_induced_map(beta, max_order)?, up.node(1), low.node(1))?;
    let alpha_lin = alpha.linearize(upper.f.dom(), lower.f.dom())?;
    let beta_lin = beta.linearize(upper.f.cod(), lower.f.cod())?;
    // Hker(f) → Hker(f') restricted, then to the middle quotient
    let k_cols: Vec<Vector> = (0..upper.kernel_alg.algebra.dim())
        .map(|x| {
            let v = alpha_lin.apply(&upper.kernel_alg.inclusion.matrix().column(x));
            lower
                .kernel
                .subspace()
                .coords(&v)
                .ok_or_else(|| Error::Inconsistent("α does not map kernel into kernel".into()))
        })
        .collect::<Result<_>>()?;
    let k_map = HopfMorphism::new(
        upper.kernel_alg.algebra.clone(),
        lower.kernel_alg.algebra.clone(),
        Matrix::from_columns(field, lower.kernel_alg.algebra.dim(), &k_cols),
    )?;
    let v2 = factor_through(&lower.middle.proj.compose(&k_map)?, &upper.middle)?;
    let v3 = factor_through(&lower.h1_dom.proj.compose(&alpha_lin)?, &upper.h1_dom)?;
    let v4 = factor_through(&lower.h1_cod.proj.compose(&beta_lin)?, &upper.h1_cod)?;
    let v5 = HopfMorphism::identity(low.node(5));
    let verticals = [v0, v1, v2, v3, v4, v5];
    let squares = (0..5)
        .map(|i| {
            let down_then_right = low.maps()[i].matrix().mul(verticals[i].matrix());
            let right_then_down = verticals[i + 1].matrix().mul(up.maps()[i].matrix());
            down_then_right == right_then_down
        })
        .collect();
    Ok(NaturalityReport { squares })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FinGroup, DEFAULT_MAX_ORDER};

    const Q: Field = Field::Rational;

    fn hom(g: FinGroup, q: FinGroup, images: Vec<usize>) -> GroupHom {
        GroupHom::new(Arc::new(g), Arc::new(q), images).unwrap()
    }

    fn sign() -> GroupHom {
        let s3 = FinGroup::symmetric3();
        let images = (0..6)
            .map(|x| usize::from(s3.element_order(x) == 2))
            .collect();
        hom(s3, FinGroup::cyclic(2), images)
    }

    #[test]
    fn identity_sequence() {
        let a = Arc::new(group_algebra(&FinGroup::symmetric3(), Q));
        let k = base_field(Q);
        let s = HopfSequence::new(
            vec!["k".into(), "A".into(), "A".into(), "k".into()],
            vec![
                HopfMorphism::trivial(&k, &a),
                HopfMorphism::identity(&a),
                HopfMorphism::trivial(&a, &k),
            ],
        )
        .unwrap();
        let r = s.check_exactness();
        assert!(r.is_complex() && r.all_exact());
        assert_eq!(r.nodes.len(), 2);
    }

    #[test]
    fn group_short_exact_sequence() {
        let phi = GroupHom::quaternion_to_klein();
        let (a, b) = (
            Arc::new(group_algebra(phi.dom(), Q)),
            Arc::new(group_algebra(phi.cod(), Q)),
        );
        let f = phi.linearize(&a, &b).unwrap();
        let kr = hopf_kernel(&f).restrict().unwrap();
        let k = base_field(Q);
        let s = HopfSequence::new(
            ["k", "k[N]", "k[G]", "k[Q]", "k"]
                .iter()
                .map(|x| x.to_string())
                .collect(),
            vec![
                HopfMorphism::trivial(&k, &kr.algebra),
                kr.inclusion.clone(),
                f.clone(),
                HopfMorphism::trivial(&b, &k),
            ],
        )
        .unwrap();
        assert!(s.check_exactness().all_exact());
    }

    #[test]
    fn q8_five_term() {
        let ft = five_term(&GroupHom::quaternion_to_klein(), Q, DEFAULT_MAX_ORDER).unwrap();
        let dims: Vec<usize> = (0..6).map(|i| ft.sequence.node(i).dim()).collect();
        assert_eq!(dims, vec![1, 2, 2, 4, 4, 1]);
        let r = ft.sequence.check_exactness();
        assert!(r.is_complex() && r.all_exact(), "{r:?}");
        assert!(ft.connecting_map().is_isomorphism());
        assert!(ft.sequence.maps()[2].is_trivial());
        let bad = ft.corrupted(0, 1).unwrap().check_exactness();
        assert_eq!(bad.failing(), vec!["H1(A)"]);
    }

    #[test]
    fn s3_five_term() {
        let ft = five_term(&sign(), Q, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(ft.middle.algebra.dim(), 1);
        assert!(ft.sequence.check_exactness().all_exact());
        assert!(ft.sequence.maps()[3].is_isomorphism());
    }

    #[test]
    fn lemma_sequences() {
        let q8 = lemma_ss_sequence(
            &GroupHom::quaternion_to_klein()
                .linearize(
                    &Arc::new(group_algebra(&FinGroup::quaternion(), Q)),
                    &Arc::new(group_algebra(&FinGroup::klein_four(), Q)),
                )
                .unwrap(),
        )
        .unwrap();
        assert_eq!(q8.middle.algebra.dim(), 2);
        assert!(q8.sequence.check_exactness().all_exact());

        let s = sign();
        let f = s
            .linearize(
                &Arc::new(group_algebra(s.dom(), Q)),
                &Arc::new(group_algebra(s.cod(), Q)),
            )
            .unwrap();
        let l = lemma_ss_sequence(&f).unwrap();
        assert_eq!(l.middle.algebra.dim(), 1);
        assert!(l.sequence.check_exactness().all_exact());

        let c4 = Arc::new(group_algebra(&FinGroup::cyclic(4), Q));
        let l = lemma_ss_sequence(&HopfMorphism::identity(&c4)).unwrap();
        let dims: Vec<usize> = (0..6).map(|i| l.sequence.node(i).dim()).collect();
        assert_eq!(dims, vec![1, 1, 1, 4, 4, 1]);
        assert!(l.sequence.check_exactness().all_exact());
    }

    #[test]
    fn naturality_q8_to_c2() {
        // (Q₈ → V₄) → (V₄ → V₄/⟨a⟩ ≅ C₂), α = φ, β = quotient by ⟨a⟩
        let phi = GroupHom::quaternion_to_klein();
        let v4 = phi.cod().clone();
        let c2 = Arc::new(FinGroup::cyclic(2));
        let beta = GroupHom::new(v4.clone(), c2.clone(), vec![0, 0, 1, 1]).unwrap();
        let upper = five_term(&phi, Q, DEFAULT_MAX_ORDER).unwrap();
        let lower = five_term(&beta, Q, DEFAULT_MAX_ORDER).unwrap();
        let r = naturality(&upper, &lower, &phi, &beta, DEFAULT_MAX_ORDER).unwrap();
        assert!(r.commutes(), "{r:?}");
    }
}
