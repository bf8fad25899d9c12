//! Crossed products `B #_σ H`, the cleft-extension analyzer and the canonical map.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{axpy, zero_vector, Matrix, Scalar, Subspace, Vector};
use crate::hopf_core::{tensor_product, FinHopfAlgebra, HopfData};
use crate::morphism::{
    convolution_inverse, hopf_kernel, is_algebra_map, is_coalgebra_map, same_algebra, CoalgebraMap,
    HopfMorphism,
};
use crate::subquot::{HopfSubalgebra, Restricted};

fn nonzero(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// A linear map `⇀: H ⊗ B → B`, column `h·dim B + b` holding `h ⇀ b`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasuringAction {
    h: Arc<FinHopfAlgebra>,
    b: Arc<FinHopfAlgebra>,
    act: Matrix,
}

impl MeasuringAction {
    /// Checks that `H` measures `B` and that `⇀` is a coalgebra map.
    pub fn new(h: Arc<FinHopfAlgebra>, b: Arc<FinHopfAlgebra>, act: Matrix) -> Result<Self> {
        if act.rows() != b.dim() || act.cols() != h.dim() * b.dim() {
            return Err(Error::InvalidMeasuring(
                "action matrix has the wrong shape".into(),
            ));
        }
        let m = MeasuringAction { h, b, act };
        m.check()?;
        Ok(m)
    }

    /// `h ⇀ b = ε(h) b`
    pub fn trivial(h: Arc<FinHopfAlgebra>, b: Arc<FinHopfAlgebra>) -> Self {
        let (nh, nb) = (h.dim(), b.dim());
        let mut act = Matrix::zeros(h.field(), nb, nh * nb);
        for i in 0..nh {
            for j in 0..nb {
                act[(j, i * nb + j)] = h.counit()[i].clone();
            }
        }
        MeasuringAction { h, b, act }
    }

    pub fn h(&self) -> &Arc<FinHopfAlgebra> {
        &self.h
    }

    pub fn b(&self) -> &Arc<FinHopfAlgebra> {
        &self.b
    }

    pub fn matrix(&self) -> &Matrix {
        &self.act
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let nb = self.b.dim();
        let mut out = self.b.zero();
        for (i, c) in nonzero(x) {
            for (j, d) in nonzero(y) {
                axpy(&mut out, &(c * d), &self.act.column(i * nb + j));
            }
        }
        out
    }

    fn basis_apply(&self, i: usize, y: &[Scalar]) -> Vector {
        self.apply(&self.h.basis(i), y)
    }

    pub fn check(&self) -> Result<()> {
        let (h, b) = (&self.h, &self.b);
        for i in 0..h.dim() {
            let eps: Vector = b.unit().iter().map(|u| u * &h.counit()[i]).collect();
            if self.basis_apply(i, b.unit()) != eps {
                return Err(Error::InvalidMeasuring(format!(
                    "{} ⇀ 1 ≠ ε({0})1",
                    h.label(i)
                )));
            }
            for x in 0..b.dim() {
                for y in 0..b.dim() {
                    let (bx, by) = (b.basis(x), b.basis(y));
                    let lhs = self.basis_apply(i, &b.mul(&bx, &by));
                    let mut rhs = b.zero();
                    for (c, p, q) in h.comult_basis(i) {
                        axpy(
                            &mut rhs,
                            c,
                            &b.mul(&self.basis_apply(*p, &bx), &self.basis_apply(*q, &by)),
                        );
                    }
                    if lhs != rhs {
                        return Err(Error::InvalidMeasuring(format!(
                            "not multiplicative at ({}, {}, {})",
                            h.label(i),
                            b.label(x),
                            b.label(y)
                        )));
                    }
                }
            }
        }
        let hb = tensor_product(h, b)?;
        if !is_coalgebra_map(&hb, b, &self.act) {
            return Err(Error::InvalidMeasuring(
                "the action is not a coalgebra map".into(),
            ));
        }
        Ok(())
    }
}

/// A normalized, convolution-invertible `σ: H ⊗ H → B`, column `g·dim H + h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle {
    h: Arc<FinHopfAlgebra>,
    b: Arc<FinHopfAlgebra>,
    sigma: Matrix,
    sigma_inv: Matrix,
}

impl Cocycle {
    /// Checks shape, normalization, the coalgebra-map property and invertibility.
    pub fn new(h: Arc<FinHopfAlgebra>, b: Arc<FinHopfAlgebra>, sigma: Matrix) -> Result<Self> {
        let n = h.dim();
        if sigma.rows() != b.dim() || sigma.cols() != n * n {
            return Err(Error::InvalidCocycle(
                "cocycle matrix has the wrong shape".into(),
            ));
        }
        let hh = tensor_product(&h, &h)?;
        let sigma_inv = convolution_inverse(&hh, &b, &sigma)
            .map_err(|_| Error::InvalidCocycle("not convolution invertible".into()))?;
        let c = Cocycle {
            h,
            b,
            sigma,
            sigma_inv,
        };
        for i in 0..n {
            let eps: Vector = c.b.unit().iter().map(|u| u * &c.h.counit()[i]).collect();
            let (x, one) = (c.h.basis(i), c.h.unit().clone());
            if c.apply(&x, &one) != eps || c.apply(&one, &x) != eps {
                return Err(Error::InvalidCocycle(format!(
                    "not normalized at {}",
                    c.h.label(i)
                )));
            }
        }
        if !is_coalgebra_map(&hh, &c.b, &c.sigma) {
            return Err(Error::InvalidCocycle("not a coalgebra map".into()));
        }
        Ok(c)
    }

    /// `σ(g ⊗ h) = ε(g)ε(h)1`
    pub fn trivial(h: Arc<FinHopfAlgebra>, b: Arc<FinHopfAlgebra>) -> Self {
        let hh = tensor_product(&h, &h).expect("same field");
        let sigma = hh.unit_counit_matrix(&b);
        Cocycle {
            h,
            b,
            sigma_inv: sigma.clone(),
            sigma,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.sigma
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.sigma_inv
    }

    pub fn is_trivial(&self) -> bool {
        let hh = tensor_product(&self.h, &self.h).expect("same field");
        self.sigma == hh.unit_counit_matrix(&self.b)
    }

    fn bilinear(&self, m: &Matrix, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.h.dim();
        let mut out = self.b.zero();
        for (i, c) in nonzero(x) {
            for (j, d) in nonzero(y) {
                axpy(&mut out, &(c * d), &m.column(i * n + j));
            }
        }
        out
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bilinear(&self.sigma, x, y)
    }

    pub fn apply_inv(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bilinear(&self.sigma_inv, x, y)
    }

    /// The cocycle identity and the twisted-module identity against `act`.
    pub fn check_against(&self, act: &MeasuringAction) -> Result<()> {
        if !same_algebra(&self.h, &act.h) || !same_algebra(&self.b, &act.b) {
            return Err(Error::InvalidCocycle(
                "action and cocycle live on different algebras".into(),
            ));
        }
        let (h, b) = (&self.h, &self.b);
        let n = h.dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut lhs = b.zero();
                    let mut rhs = b.zero();
                    for (c1, x1, x2) in h.comult_basis(x) {
                        for (c2, y1, y2) in h.comult_basis(y) {
                            let c12 = c1 * c2;
                            for (c3, z1, z2) in h.comult_basis(z) {
                                let inner = self.apply(&h.basis(*y1), &h.basis(*z1));
                                let acted = act.basis_apply(*x1, &inner);
                                let yz = h.mul(&h.basis(*y2), &h.basis(*z2));
                                let tail = self.apply(&h.basis(*x2), &yz);
                                axpy(&mut lhs, &(&c12 * c3), &b.mul(&acted, &tail));
                            }
                            let xy = h.mul(&h.basis(*x2), &h.basis(*y2));
                            let t = b.mul(
                                &self.apply(&h.basis(*x1), &h.basis(*y1)),
                                &self.apply(&xy, &h.basis(z)),
                            );
                            axpy(&mut rhs, &c12, &t);
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::InvalidCocycle(format!(
                            "cocycle identity fails at ({}, {}, {})",
                            h.label(x),
                            h.label(y),
                            h.label(z)
                        )));
                    }
                }
            }
        }
        for j in 0..b.dim() {
            let bj = b.basis(j);
            if act.apply(h.unit(), &bj) != bj {
                return Err(Error::NotTwistedModule(format!("1 ⇀ {} ≠ {0}", b.label(j))));
            }
            for x in 0..n {
                for y in 0..n {
                    let lhs = act.basis_apply(x, &act.basis_apply(y, &bj));
                    let mut rhs = b.zero();
                    for (c1, x1, x2, x3) in h.comul2(&h.basis(x)) {
                        for (c2, y1, y2, y3) in h.comul2(&h.basis(y)) {
                            let mid = act.apply(&h.mul(&h.basis(x2), &h.basis(y2)), &bj);
                            let t = b.mul_all(&[
                                &self.apply(&h.basis(x1), &h.basis(y1)),
                                &mid,
                                &self.apply_inv(&h.basis(x3), &h.basis(y3)),
                            ]);
                            axpy(&mut rhs, &(&c1 * &c2), &t);
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::NotTwistedModule(format!(
                            "fails at ({}, {}, {})",
                            h.label(x),
                            h.label(y),
                            b.label(j)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Both compatibility conditions needed for `B #_σ H` to be a Hopf algebra with the
/// tensor coalgebra: `g₁ ⊗ (g₂ ⇀ a) = g₂ ⊗ (g₁ ⇀ a)` and
/// `g₁h₁ ⊗ σ(g₂ ⊗ h₂) = g₂h₂ ⊗ σ(g₁ ⊗ h₁)`.
pub fn hopf_compatibility(act: &MeasuringAction, sig: &Cocycle) -> bool {
    let (h, b) = (&act.h, &act.b);
    let (n, m) = (h.dim(), b.dim());
    let tensor = |pairs: Vec<(Scalar, Vector, Vector)>| -> Vector {
        let mut out = zero_vector(h.field(), n * m);
        for (c, u, v) in pairs {
            for (i, x) in nonzero(&u) {
                for (j, y) in nonzero(&v) {
                    out[i * m + j] = &out[i * m + j] + &(&c * &(x * y));
                }
            }
        }
        out
    };
    let action_ok = (0..n).all(|g| {
        (0..m).all(|a| {
            let ba = b.basis(a);
            let terms = h.comult_basis(g);
            let l = tensor(
                terms
                    .iter()
                    .map(|(c, p, q)| (c.clone(), h.basis(*p), act.basis_apply(*q, &ba)))
                    .collect(),
            );
            let r = tensor(
                terms
                    .iter()
                    .map(|(c, p, q)| (c.clone(), h.basis(*q), act.basis_apply(*p, &ba)))
                    .collect(),
            );
            l == r
        })
    });
    let cocycle_ok = (0..n).all(|g| {
        (0..n).all(|k| {
            let mut l = Vec::new();
            let mut r = Vec::new();
            for (c, g1, g2) in h.comult_basis(g) {
                for (d, k1, k2) in h.comult_basis(k) {
                    let cd = c * d;
                    l.push((
                        cd.clone(),
                        h.mul(&h.basis(*g1), &h.basis(*k1)),
                        sig.apply(&h.basis(*g2), &h.basis(*k2)),
                    ));
                    r.push((
                        cd,
                        h.mul(&h.basis(*g2), &h.basis(*k2)),
                        sig.apply(&h.basis(*g1), &h.basis(*k1)),
                    ));
                }
            }
            tensor(l) == tensor(r)
        })
    });
    action_ok && cocycle_ok
}

/// `B #_σ H` with its projection `π_H` and coalgebra section `i_H`.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub algebra: Arc<FinHopfAlgebra>,
    pub pi_h: HopfMorphism,
    pub i_h: CoalgebraMap,
}

/// Basis `b ⊗ h` at index `b·dim H + h`; product
/// `(b ⊗ h)(b' ⊗ h') = b(h₁ ⇀ b')σ(h₂ ⊗ h'₁) ⊗ h₃h'₂` and the tensor coalgebra.
pub fn build_crossed_product(act: &MeasuringAction, sig: &Cocycle) -> Result<CrossedProduct> {
    act.check()?;
    sig.check_against(act)?;
    let (h, b) = (act.h.clone(), act.b.clone());
    let (nh, nb) = (h.dim(), b.dim());
    let field = h.field();
    let idx = |x: usize, y: usize| x * nh + y;
    let dim = nb * nh;
    let mut mult = Vec::with_capacity(dim * dim);
    for bx in 0..nb {
        for hx in 0..nh {
            let d2 = h.comul2(&h.basis(hx));
            for by in 0..nb {
                for hy in 0..nh {
                    let mut acc = std::collections::BTreeMap::new();
                    for (c, h1, h2, h3) in &d2 {
                        let acted = act.basis_apply(*h1, &b.basis(by));
                        for (d, y1, y2) in h.comult_basis(hy) {
                            let left = b.mul_all(&[
                                &b.basis(bx),
                                &acted,
                                &sig.apply(&h.basis(*h2), &h.basis(*y1)),
                            ]);
                            let right = h.mul(&h.basis(*h3), &h.basis(*y2));
                            let cd = c * d;
                            for (u, p) in nonzero(&left) {
                                for (v, q) in nonzero(&right) {
                                    crate::hopf_core::add_to(
                                        &mut acc,
                                        idx(u, v),
                                        &(&cd * &(p * q)),
                                    );
                                }
                            }
                        }
                    }
                    mult.push(crate::hopf_core::pruned(acc).into_iter().collect());
                }
            }
        }
    }
    let mut unit = zero_vector(field, dim);
    for (u, p) in nonzero(b.unit()) {
        for (v, q) in nonzero(h.unit()) {
            unit[idx(u, v)] = p * q;
        }
    }
    let comult = (0..nb)
        .flat_map(|x| (0..nh).map(move |y| (x, y)))
        .map(|(x, y)| {
            let mut terms = Vec::new();
            for (c, b1, b2) in b.comult_basis(x) {
                for (d, h1, h2) in h.comult_basis(y) {
                    terms.push((c * d, idx(*b1, *h1), idx(*b2, *h2)));
                }
            }
            terms
        })
        .collect();
    let counit = (0..nb)
        .flat_map(|x| (0..nh).map(move |y| (x, y)))
        .map(|(x, y)| &b.counit()[x] * &h.counit()[y])
        .collect();
    let labels = (0..nb)
        .flat_map(|x| (0..nh).map(move |y| (x, y)))
        .map(|(x, y)| format!("{}#{}", b.label(x), h.label(y)))
        .collect();
    let mut data = HopfData {
        field,
        dim,
        mult,
        unit,
        comult,
        counit,
        antipode: Matrix::identity(field, dim),
        labels: Some(labels),
    };
    let bialgebra = FinHopfAlgebra::from_data(data.clone())?;
    data.antipode = convolution_inverse(&bialgebra, &bialgebra, &Matrix::identity(field, dim))
        .map_err(|_| Error::InvalidCocycle("crossed product has no antipode".into()))?;
    let algebra = Arc::new(FinHopfAlgebra::new(data)?);
    let mut pi = Matrix::zeros(field, nh, dim);
    let mut ih = Matrix::zeros(field, dim, nh);
    for x in 0..nb {
        for y in 0..nh {
            pi[(y, idx(x, y))] = b.counit()[x].clone();
            ih[(idx(x, y), y)] = b.unit()[x].clone();
        }
    }
    let pi_h = HopfMorphism::new(algebra.clone(), h.clone(), pi)?;
    let i_h = CoalgebraMap::new(h, algebra.clone(), ih)?;
    Ok(CrossedProduct { algebra, pi_h, i_h })
}

/// Everything the analyzer derives from a surjection with a coalgebra section.
#[derive(Clone, Debug)]
pub struct CleftData {
    pub p: HopfMorphism,
    pub section: CoalgebraMap,
    pub kernel: HopfSubalgebra,
    pub b: Restricted,
    /// Convolution inverse of the section.
    pub section_inv: Matrix,
    pub action: MeasuringAction,
    pub cocycle: Cocycle,
    pub crossed: CrossedProduct,
    /// `ψ: dom(p) → B #_σ H`, a verified Hopf isomorphism.
    pub psi: HopfMorphism,
    pub psi_inv: Matrix,
}

/// Validates a raw matrix as a coalgebra section of `p`.
pub fn section_from_matrix(p: &HopfMorphism, m: Matrix) -> Result<CoalgebraMap> {
    let (a, h) = (p.dom(), p.cod());
    if m.rows() != a.dim() || m.cols() != h.dim() || !p.matrix().mul(&m).is_identity() {
        return Err(Error::NotASection);
    }
    if !is_coalgebra_map(h, a, &m) {
        return Err(Error::SectionNotCoalgebra);
    }
    CoalgebraMap::new(h.clone(), a.clone(), m)
}

/// Sections with `i(1) ≠ 1` are first replaced by `h ↦ i(h)·S(i(1))`; the stored section is the
/// normalized one.
pub fn analyze_cleft(p: &HopfMorphism, i: &CoalgebraMap) -> Result<CleftData> {
    if !i.is_section_of(p) {
        return Err(Error::NotASection);
    }
    if !p.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (a, h) = (p.dom().clone(), p.cod().clone());
    let field = a.field();
    // i ↦ i·S(i(1)), so that i(1) = 1
    let g = i.matrix().apply(h.unit());
    let normalized;
    let i = if &g == a.unit() {
        i
    } else {
        let sg = a.antipode_of(&g);
        let cols: Vec<Vector> = (0..h.dim())
            .map(|x| a.mul(&i.matrix().column(x), &sg))
            .collect();
        normalized = CoalgebraMap::new(
            h.clone(),
            a.clone(),
            Matrix::from_columns(field, a.dim(), &cols),
        )?;
        &normalized
    };
    let kernel = hopf_kernel(p);
    let b = kernel.restrict()?;
    let balg = b.algebra.clone();
    let (nh, nb) = (h.dim(), balg.dim());
    let i_cols: Vec<Vector> = (0..nh).map(|x| i.matrix().column(x)).collect();
    let si_cols: Vec<Vector> = i_cols.iter().map(|v| a.antipode_of(v)).collect();
    let section_inv = convolution_inverse(&h, &a, i.matrix())?;
    let in_b = |v: &[Scalar]| kernel.subspace().coords(v).ok_or(Error::ValuesEscapeKernel);

    let mut act_cols = Vec::with_capacity(nh * nb);
    for x in 0..nh {
        for y in 0..nb {
            let by = b.inclusion.apply(&balg.basis(y));
            let mut acc = a.zero();
            for (c, x1, x2) in h.comult_basis(x) {
                axpy(&mut acc, c, &a.mul_all(&[&i_cols[*x1], &by, &si_cols[*x2]]));
            }
            act_cols.push(in_b(&acc)?);
        }
    }
    let mut sigma_cols = Vec::with_capacity(nh * nh);
    for x in 0..nh {
        for y in 0..nh {
            let mut acc = a.zero();
            for (c, x1, x2) in h.comult_basis(x) {
                for (d, y1, y2) in h.comult_basis(y) {
                    let xy = h.mul(&h.basis(*x2), &h.basis(*y2));
                    let s_i_xy = a.antipode_of(&i.apply(&xy));
                    axpy(
                        &mut acc,
                        &(c * d),
                        &a.mul_all(&[&i_cols[*x1], &i_cols[*y1], &s_i_xy]),
                    );
                }
            }
            sigma_cols.push(in_b(&acc)?);
        }
    }
    let action = MeasuringAction::new(
        h.clone(),
        balg.clone(),
        Matrix::from_columns(field, nb, &act_cols),
    )?;
    let cocycle = Cocycle::new(
        h.clone(),
        balg.clone(),
        Matrix::from_columns(field, nb, &sigma_cols),
    )?;
    let crossed = build_crossed_product(&action, &cocycle)?;

    // ψ(a) = a₁ S(i(p(a₂))) ⊗ p(a₃)
    let p_cols: Vec<Vector> = (0..a.dim()).map(|x| p.matrix().column(x)).collect();
    let psi_cols: Vec<Vector> = (0..a.dim())
        .map(|x| {
            let mut out = zero_vector(field, nb * nh);
            for (c, x1, x2, x3) in a.comul2(&a.basis(x)) {
                let left = a.mul(&a.basis(x1), &a.antipode_of(&i.apply(&p_cols[x2])));
                let left = in_b(&left)?;
                for (u, s) in nonzero(&left) {
                    for (v, t) in nonzero(&p_cols[x3]) {
                        out[u * nh + v] = &out[u * nh + v] + &(&c * &(s * t));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let psi = HopfMorphism::new(
        a.clone(),
        crossed.algebra.clone(),
        Matrix::from_columns(field, nb * nh, &psi_cols),
    )?;
    // ψ⁻¹(b ⊗ h) = b · i(h)
    let psi_inv_cols: Vec<Vector> = (0..nb)
        .flat_map(|u| (0..nh).map(move |v| (u, v)))
        .map(|(u, v)| a.mul(&b.inclusion.apply(&balg.basis(u)), &i_cols[v]))
        .collect();
    let psi_inv = Matrix::from_columns(field, a.dim(), &psi_inv_cols);
    if !psi_inv.mul(psi.matrix()).is_identity() || !psi.matrix().mul(&psi_inv).is_identity() {
        return Err(Error::Inconsistent(
            "ψ and ψ⁻¹ are not mutually inverse".into(),
        ));
    }
    Ok(CleftData {
        p: p.clone(),
        section: i.clone(),
        kernel,
        b,
        section_inv,
        action,
        cocycle,
        crossed,
        psi,
        psi_inv,
    })
}

/// Whether the section is multiplicative, making the extension a smash product.
pub fn is_trivial_extension(d: &CleftData) -> bool {
    is_algebra_map(d.section.dom(), d.section.cod(), d.section.matrix())
}

/// Outcome of checking the canonical map `can: A ⊗_B A → A ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CanonicalMapReport {
    pub dim_tensor_over_b: usize,
    pub dim_a_tensor_h: usize,
    pub well_defined: bool,
    pub can_after_inverse_is_identity: bool,
    pub inverse_after_can_is_identity: bool,
}

impl CanonicalMapReport {
    pub fn passed(&self) -> bool {
        self.well_defined
            && self.can_after_inverse_is_identity
            && self.inverse_after_can_is_identity
    }
}

/// Builds `A ⊗_B A`, `can(a ⊗ a') = a a'₁ ⊗ p(a'₂)` and
/// `can⁻¹(a ⊗ h) = a j⁻¹(h₁) ⊗ j(h₂)`, and checks both composites.
pub fn canonical_map_check(d: &CleftData) -> CanonicalMapReport {
    let (a, h) = (d.p.dom(), d.p.cod());
    let (na, nh) = (a.dim(), h.dim());
    let field = a.field();
    let tensor_aa = |x: &[Scalar], y: &[Scalar]| -> Vector {
        let mut out = zero_vector(field, na * na);
        for (i, s) in nonzero(x) {
            for (j, t) in nonzero(y) {
                out[i * na + j] = s * t;
            }
        }
        out
    };
    let b_plus: Vec<Vector> = d
        .kernel
        .augmentation()
        .basis_vectors()
        .map(|v| v.to_vec())
        .collect();
    let mut rel = Vec::new();
    for x in 0..na {
        for y in 0..na {
            let (ex, ey) = (a.basis(x), a.basis(y));
            for bp in &b_plus {
                let l = tensor_aa(&a.mul(&ex, bp), &ey);
                let r = tensor_aa(&ex, &a.mul(bp, &ey));
                rel.push(crate::exactla::sub_vectors(&l, &r));
            }
        }
    }
    let rel = Subspace::span(field, na * na, rel);
    let reps = rel.complement_indices();
    let p_cols: Vec<Vector> = (0..na).map(|x| d.p.matrix().column(x)).collect();
    let can_of = |x: usize, y: usize| -> Vector {
        let mut out = zero_vector(field, na * nh);
        for (c, y1, y2) in a.comult_basis(y) {
            let left = a.mul(&a.basis(x), &a.basis(*y1));
            for (u, s) in nonzero(&left) {
                for (v, t) in nonzero(&p_cols[*y2]) {
                    out[u * nh + v] = &out[u * nh + v] + &(c * &(s * t));
                }
            }
        }
        out
    };
    let can_full = Matrix::from_columns(
        field,
        na * nh,
        &(0..na * na)
            .map(|k| can_of(k / na, k % na))
            .collect::<Vec<_>>(),
    );
    let well_defined = rel
        .basis_vectors()
        .all(|v| can_full.apply(v).iter().all(Scalar::is_zero));
    let can_bar = Matrix::from_columns(
        field,
        na * nh,
        &reps.iter().map(|&k| can_full.column(k)).collect::<Vec<_>>(),
    );
    let j_cols: Vec<Vector> = (0..nh).map(|x| d.section.matrix().column(x)).collect();
    let jinv_cols: Vec<Vector> = (0..nh).map(|x| d.section_inv.column(x)).collect();
    let inv_cols: Vec<Vector> = (0..na * nh)
        .map(|k| {
            let (x, y) = (k / nh, k % nh);
            let mut t = zero_vector(field, na * na);
            for (c, y1, y2) in h.comult_basis(y) {
                let l = a.mul(&a.basis(x), &jinv_cols[*y1]);
                axpy(&mut t, c, &tensor_aa(&l, &j_cols[*y2]));
            }
            rel.quotient_coords(&t)
        })
        .collect();
    let can_inv = Matrix::from_columns(field, reps.len(), &inv_cols);
    CanonicalMapReport {
        dim_tensor_over_b: reps.len(),
        dim_a_tensor_h: na * nh,
        well_defined,
        can_after_inverse_is_identity: reps.len() == na * nh && can_bar.mul(&can_inv).is_identity(),
        inverse_after_can_is_identity: can_inv.mul(&can_bar).is_identity(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;
    use crate::groups::{group_algebra, linearize_section, FinGroup, GroupHom};

    const Q: Field = Field::Rational;

    fn ga(g: &FinGroup) -> Arc<FinHopfAlgebra> {
        Arc::new(group_algebra(g, Q))
    }

    fn cyclic_order_of_grouplikes(a: &FinHopfAlgebra) -> (usize, usize) {
        let (g, _) = FinGroup::from_grouplikes(a).unwrap();
        (
            g.order(),
            (0..g.order()).map(|x| g.element_order(x)).max().unwrap(),
        )
    }

    #[test]
    fn c2_by_c2_with_and_without_cocycle() {
        let (b, h) = (ga(&FinGroup::cyclic(2)), ga(&FinGroup::cyclic(2)));
        let act = MeasuringAction::trivial(h.clone(), b.clone());
        // σ(g ⊗ g) = t, all other basis pairs ↦ 1
        let mut sigma = Matrix::zeros(Q, 2, 4);
        for k in 0..3 {
            sigma[(0, k)] = Q.one();
        }
        sigma[(1, 3)] = Q.one();
        let sig = Cocycle::new(h.clone(), b.clone(), sigma).unwrap();
        let cp = build_crossed_product(&act, &sig).unwrap();
        assert_eq!(cyclic_order_of_grouplikes(&cp.algebra), (4, 4));
        // (1⊗g)² = t⊗1
        let g = cp.algebra.basis(1);
        assert_eq!(cp.algebra.mul(&g, &g), cp.algebra.basis(2));
        assert_eq!(hopf_kernel(&cp.pi_h).dim(), 2);

        let smash = build_crossed_product(&act, &Cocycle::trivial(h.clone(), b.clone())).unwrap();
        assert_eq!(cyclic_order_of_grouplikes(&smash.algebra), (4, 2));
        assert!(smash.algebra.is_commutative());
    }

    #[test]
    fn trivial_coefficients() {
        let k = Arc::new(FinHopfAlgebra::base_field(Q));
        let h = ga(&FinGroup::cyclic(2));
        let cp = build_crossed_product(
            &MeasuringAction::trivial(h.clone(), k.clone()),
            &Cocycle::trivial(h.clone(), k.clone()),
        )
        .unwrap();
        assert_eq!(cp.algebra.dim(), 2);
        assert!(cp.pi_h.is_isomorphism());
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let (b, h) = (ga(&FinGroup::cyclic(2)), ga(&FinGroup::cyclic(2)));
        let mut sigma = Matrix::zeros(Q, 2, 4);
        sigma[(1, 0)] = Q.one();
        for k in 1..4 {
            sigma[(0, k)] = Q.one();
        }
        assert!(matches!(
            Cocycle::new(h.clone(), b.clone(), sigma),
            Err(Error::InvalidCocycle(_))
        ));
        let zero = Matrix::zeros(Q, 2, 4);
        assert!(matches!(
            MeasuringAction::new(h, b, zero),
            Err(Error::InvalidMeasuring(_))
        ));
    }

    #[test]
    fn c4_over_c2() {
        let (c4, c2) = (FinGroup::cyclic(4), FinGroup::cyclic(2));
        let phi =
            GroupHom::new(Arc::new(c4.clone()), Arc::new(c2.clone()), vec![0, 1, 0, 1]).unwrap();
        let (a, h) = (ga(&c4), ga(&c2));
        let p = phi.linearize(&a, &h).unwrap();
        let i = linearize_section(&phi, &[0, 1], &a, &h).unwrap();
        let d = analyze_cleft(&p, &i).unwrap();
        // σ(g ⊗ g) = i(g)i(g)S(i(1)) = x²
        let g = h.basis(1);
        let s = d.cocycle.apply(&g, &g);
        assert_eq!(d.b.inclusion.apply(&s), a.basis(2));
        assert!(!is_trivial_extension(&d));
        assert!(!d.cocycle.is_trivial());
        let report = canonical_map_check(&d);
        assert_eq!((report.dim_tensor_over_b, report.dim_a_tensor_h), (8, 8));
        assert!(report.passed());
        assert!(hopf_compatibility(&d.action, &d.cocycle));
    }

    #[test]
    fn split_extension_is_trivial() {
        let c2 = FinGroup::cyclic(2);
        let v = FinGroup::direct_product(&c2, &c2);
        let phi =
            GroupHom::new(Arc::new(v.clone()), Arc::new(c2.clone()), vec![0, 1, 0, 1]).unwrap();
        let (a, h) = (ga(&v), ga(&c2));
        let p = phi.linearize(&a, &h).unwrap();
        let d = analyze_cleft(&p, &linearize_section(&phi, &[0, 1], &a, &h).unwrap()).unwrap();
        assert!(is_trivial_extension(&d));
        assert!(d.cocycle.is_trivial());
        let id = HopfMorphism::identity(&a);
        let d_id = analyze_cleft(&id, &id.to_coalgebra_map()).unwrap();
        assert!(is_trivial_extension(&d_id));
        assert!(canonical_map_check(&d_id).passed());
    }

    #[test]
    fn section_errors() {
        let phi = GroupHom::quaternion_to_klein();
        let (a, h) = (ga(phi.dom()), ga(phi.cod()));
        let p = phi.linearize(&a, &h).unwrap();
        let zero = Matrix::zeros(Q, 8, 4);
        assert_eq!(
            section_from_matrix(&p, zero).unwrap_err(),
            Error::NotASection
        );
        // halves of both preimages: a section, but not a coalgebra map
        let half = Q.parse("1/2").unwrap();
        let mut m = Matrix::zeros(Q, 8, 4);
        for q in 0..4 {
            m[(2 * q, q)] = half.clone();
            m[(2 * q + 1, q)] = half.clone();
        }
        assert_eq!(
            section_from_matrix(&p, m).unwrap_err(),
            Error::SectionNotCoalgebra
        );
    }

    #[test]
    fn section_inverse_is_antipode_of_section() {
        let phi = GroupHom::quaternion_to_klein();
        let (a, h) = (ga(phi.dom()), ga(phi.cod()));
        let p = phi.linearize(&a, &h).unwrap();
        for s in phi.set_sections(4) {
            let i = linearize_section(&phi, &s, &a, &h).unwrap();
            let d = analyze_cleft(&p, &i).unwrap();
            assert_eq!(d.section_inv, a.antipode().mul(d.section.matrix()));
            assert!(!is_trivial_extension(&d));
        }
    }
}
