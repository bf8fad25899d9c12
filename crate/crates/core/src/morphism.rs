//! Hopf morphisms, coalgebra maps, Hopf kernels, pullbacks and kernel pairs,
//! images, and the convolution product on linear maps.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vector, zero_vector, Matrix, Scalar, Subspace, Vector};
use crate::hopf_core::{tensor_product, FinHopfAlgebra};
use crate::subquot::{quotient_by_normal, HopfSubalgebra, Quotient};

pub(crate) fn same_algebra(a: &Arc<FinHopfAlgebra>, b: &Arc<FinHopfAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// `(f ⊗ f) Δ(x)` as a dense tensor over the codomain.
fn push_tensor(f: &Matrix, cod: &FinHopfAlgebra, terms: &[(Scalar, usize, usize)]) -> Vector {
    let m = cod.dim();
    let mut out = zero_vector(cod.field(), m * m);
    for (c, j, k) in terms {
        let fj = f.column(*j);
        let fk = f.column(*k);
        for (a, x) in fj.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let cx = c * x;
            for (b, y) in fk.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[a * m + b] = &out[a * m + b] + &(&cx * y);
            }
        }
    }
    out
}

fn check_shape(dom: &FinHopfAlgebra, cod: &FinHopfAlgebra, m: &Matrix) -> Result<()> {
    if dom.field() != cod.field() {
        return Err(Error::FieldMismatch(dom.field(), cod.field()));
    }
    if m.rows() != cod.dim() || m.cols() != dom.dim() {
        return Err(Error::MalformedStructure(format!(
            "morphism matrix is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            cod.dim(),
            dom.dim()
        )));
    }
    Ok(())
}

pub fn is_algebra_map(dom: &FinHopfAlgebra, cod: &FinHopfAlgebra, m: &Matrix) -> bool {
    if m.apply(dom.unit()) != *cod.unit() {
        return false;
    }
    let cols: Vec<Vector> = (0..dom.dim()).map(|j| m.column(j)).collect();
    (0..dom.dim()).all(|i| {
        (0..dom.dim()).all(|j| {
            let mut prod = dom.zero();
            for (k, c) in dom.mult_basis(i, j) {
                prod[*k] = c.clone();
            }
            m.apply(&prod) == cod.mul(&cols[i], &cols[j])
        })
    })
}

pub fn is_coalgebra_map(dom: &FinHopfAlgebra, cod: &FinHopfAlgebra, m: &Matrix) -> bool {
    (0..dom.dim()).all(|i| {
        let fi = m.column(i);
        cod.counit_of(&fi) == dom.counit()[i]
            && push_tensor(m, cod, dom.comult_basis(i)) == cod.comul_dense(&fi)
    })
}

/// A morphism of Hopf algebras, stored as a `dim(cod) × dim(dom)` matrix.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    dom: Arc<FinHopfAlgebra>,
    cod: Arc<FinHopfAlgebra>,
    matrix: Matrix,
}

impl PartialEq for HopfMorphism {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.dom, &other.dom)
            && same_algebra(&self.cod, &other.cod)
            && self.matrix == other.matrix
    }
}

impl HopfMorphism {
    /// Validates that `matrix` is an algebra and coalgebra map commuting with antipodes.
    pub fn new(dom: Arc<FinHopfAlgebra>, cod: Arc<FinHopfAlgebra>, matrix: Matrix) -> Result<Self> {
        check_shape(&dom, &cod, &matrix)?;
        if !is_algebra_map(&dom, &cod, &matrix) {
            return Err(Error::NotAHopfMorphism(
                "not multiplicative or not unital".into(),
            ));
        }
        if !is_coalgebra_map(&dom, &cod, &matrix) {
            return Err(Error::NotAHopfMorphism(
                "not comultiplicative or not counital".into(),
            ));
        }
        if matrix.mul(dom.antipode()) != cod.antipode().mul(&matrix) {
            return Err(Error::NotAHopfMorphism(
                "does not commute with the antipodes".into(),
            ));
        }
        Ok(HopfMorphism { dom, cod, matrix })
    }

    /// No axiom checks; used for deliberately broken maps in negative controls.
    pub fn new_unchecked(
        dom: Arc<FinHopfAlgebra>,
        cod: Arc<FinHopfAlgebra>,
        matrix: Matrix,
    ) -> Result<Self> {
        check_shape(&dom, &cod, &matrix)?;
        Ok(HopfMorphism { dom, cod, matrix })
    }

    pub fn identity(a: &Arc<FinHopfAlgebra>) -> Self {
        HopfMorphism {
            dom: a.clone(),
            cod: a.clone(),
            matrix: Matrix::identity(a.field(), a.dim()),
        }
    }

    /// The zero morphism `u_cod ∘ ε_dom`.
    pub fn trivial(dom: &Arc<FinHopfAlgebra>, cod: &Arc<FinHopfAlgebra>) -> Self {
        HopfMorphism {
            dom: dom.clone(),
            cod: cod.clone(),
            matrix: dom.unit_counit_matrix(cod),
        }
    }

    pub fn dom(&self) -> &Arc<FinHopfAlgebra> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinHopfAlgebra> {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.apply(x)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &HopfMorphism) -> Result<HopfMorphism> {
        if !same_algebra(&first.cod, &self.dom) {
            return Err(Error::NotComposable(
                "codomain of the first map is not the domain of the second".into(),
            ));
        }
        Ok(HopfMorphism {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.matrix == self.dom.unit_counit_matrix(&self.cod)
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.cod.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.dom.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.dom.dim() == self.cod.dim() && self.is_injective()
    }

    /// Whether the stored matrix satisfies every Hopf morphism identity.
    pub fn is_valid(&self) -> bool {
        is_algebra_map(&self.dom, &self.cod, &self.matrix)
            && is_coalgebra_map(&self.dom, &self.cod, &self.matrix)
            && self.matrix.mul(self.dom.antipode()) == self.cod.antipode().mul(&self.matrix)
    }

    pub fn to_coalgebra_map(&self) -> CoalgebraMap {
        CoalgebraMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            matrix: self.matrix.clone(),
        }
    }
}

/// A coalgebra map between Hopf algebras; sections of Hopf surjections live here.
#[derive(Clone, Debug)]
pub struct CoalgebraMap {
    dom: Arc<FinHopfAlgebra>,
    cod: Arc<FinHopfAlgebra>,
    matrix: Matrix,
}

impl CoalgebraMap {
    pub fn new(dom: Arc<FinHopfAlgebra>, cod: Arc<FinHopfAlgebra>, matrix: Matrix) -> Result<Self> {
        check_shape(&dom, &cod, &matrix)?;
        if !is_coalgebra_map(&dom, &cod, &matrix) {
            return Err(Error::NotACoalgebraMap(
                "comultiplication or counit not preserved".into(),
            ));
        }
        Ok(CoalgebraMap { dom, cod, matrix })
    }

    pub fn dom(&self) -> &Arc<FinHopfAlgebra> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinHopfAlgebra> {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.apply(x)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &CoalgebraMap) -> Result<CoalgebraMap> {
        if !same_algebra(&first.cod, &self.dom) {
            return Err(Error::NotComposable(
                "codomain of the first map is not the domain of the second".into(),
            ));
        }
        Ok(CoalgebraMap {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    pub fn is_multiplicative(&self) -> bool {
        is_algebra_map(&self.dom, &self.cod, &self.matrix)
    }

    /// Whether `p ∘ self` is the identity.
    pub fn is_section_of(&self, p: &HopfMorphism) -> bool {
        same_algebra(&p.dom, &self.cod)
            && same_algebra(&p.cod, &self.dom)
            && p.matrix.mul(&self.matrix).is_identity()
    }
}

/// `Hker(f) = {x : x₁ ⊗ f(x₂) = x ⊗ 1}`.
pub fn hopf_kernel(f: &HopfMorphism) -> HopfSubalgebra {
    let a = &f.dom;
    let (n, m) = (a.dim(), f.cod.dim());
    let cod_unit = f.cod.unit();
    let columns: Vec<Vector> = (0..n)
        .map(|i| {
            let mut col = zero_vector(a.field(), n * m);
            for (c, j, k) in a.comult_basis(i) {
                let fk = f.matrix.column(*k);
                for (b, y) in fk.iter().enumerate() {
                    if !y.is_zero() {
                        col[j * m + b] = &col[j * m + b] + &(c * y);
                    }
                }
            }
            for (b, u) in cod_unit.iter().enumerate() {
                if !u.is_zero() {
                    col[i * m + b] = &col[i * m + b] - u;
                }
            }
            col
        })
        .collect();
    let ker = Matrix::from_columns(a.field(), n * m, &columns).kernel_basis();
    HopfSubalgebra::from_subspace(a.clone(), ker)
}

/// A pullback `A ×_C B` realised inside `A ⊗ B`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub sub: HopfSubalgebra,
    pub algebra: Arc<FinHopfAlgebra>,
    /// `P → A ⊗ B`
    pub inclusion: HopfMorphism,
    pub pi1: HopfMorphism,
    pub pi2: HopfMorphism,
}

/// Pullback of `f: A → C` and `g: B → C`: the elements `a ⊗ b` with
/// `a₁ ⊗ f(a₂) ⊗ b = a ⊗ g(b₁) ⊗ b₂`.
pub fn pullback(f: &HopfMorphism, g: &HopfMorphism) -> Result<Pullback> {
    if !same_algebra(&f.cod, &g.cod) {
        return Err(Error::NotComposable(
            "pullback legs have different codomains".into(),
        ));
    }
    let (a, b) = (&f.dom, &g.dom);
    let (na, nb, nc) = (a.dim(), b.dim(), f.cod.dim());
    let field = a.field();
    let idx = |i: usize, c: usize, j: usize| (i * nc + c) * nb + j;
    let f_cols: Vec<Vector> = (0..na).map(|k| f.matrix.column(k)).collect();
    let g_cols: Vec<Vector> = (0..nb).map(|k| g.matrix.column(k)).collect();
    let mut columns = Vec::with_capacity(na * nb);
    for i in 0..na {
        for j in 0..nb {
            let mut col = zero_vector(field, na * nc * nb);
            for (c, p, q) in a.comult_basis(i) {
                for (t, y) in f_cols[*q].iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                    let x = idx(*p, t, j);
                    col[x] = &col[x] + &(c * y);
                }
            }
            for (d, r, s) in b.comult_basis(j) {
                for (t, y) in g_cols[*r].iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                    let x = idx(i, t, *s);
                    col[x] = &col[x] - &(d * y);
                }
            }
            columns.push(col);
        }
    }
    let ker = Matrix::from_columns(field, na * nc * nb, &columns).kernel_basis();
    let ab = Arc::new(tensor_product(a, b)?);
    let sub = HopfSubalgebra::from_subspace(ab, ker);
    let restricted = sub.restrict()?;
    let algebra = restricted.algebra.clone();
    let incl = restricted.inclusion.matrix();
    // π₁ = Id ⊗ ε, π₂ = ε ⊗ Id on A ⊗ B
    let mut id_eps = Matrix::zeros(field, na, na * nb);
    let mut eps_id = Matrix::zeros(field, nb, na * nb);
    for i in 0..na {
        for j in 0..nb {
            id_eps[(i, i * nb + j)] = b.counit()[j].clone();
            eps_id[(j, i * nb + j)] = a.counit()[i].clone();
        }
    }
    let pi1 = HopfMorphism::new(algebra.clone(), a.clone(), id_eps.mul(incl))?;
    let pi2 = HopfMorphism::new(algebra.clone(), b.clone(), eps_id.mul(incl))?;
    Ok(Pullback {
        sub,
        algebra,
        inclusion: restricted.inclusion,
        pi1,
        pi2,
    })
}

/// Kernel pair `(Eq(f), π₁, π₂)` with the reflexivity map `A → Eq(f)` given by `Δ`.
#[derive(Clone, Debug)]
pub struct KernelPair {
    pub pullback: Pullback,
    pub refl: HopfMorphism,
}

impl KernelPair {
    pub fn algebra(&self) -> &Arc<FinHopfAlgebra> {
        &self.pullback.algebra
    }
}

pub fn kernel_pair(f: &HopfMorphism) -> Result<KernelPair> {
    let pb = pullback(f, f)?;
    let a = &f.dom;
    let n = a.dim();
    let sub = &pb.sub;
    let columns: Vec<Vector> = (0..n)
        .map(|i| {
            let d = a.comul_dense(&a.basis(i));
            sub.subspace()
                .coords(&d)
                .ok_or_else(|| Error::Inconsistent("Δ(A) is not contained in Eq(f)".into()))
        })
        .collect::<Result<_>>()?;
    let refl = HopfMorphism::new(
        a.clone(),
        pb.algebra.clone(),
        Matrix::from_columns(a.field(), sub.dim(), &columns),
    )?;
    Ok(KernelPair { pullback: pb, refl })
}

/// Dimension of `Eq(f)` without materialising its structure constants.
pub fn kernel_pair_dim(f: &HopfMorphism) -> usize {
    let a = &f.dom;
    let (n, m) = (a.dim(), f.cod.dim());
    let field = a.field();
    let idx = |i: usize, c: usize, j: usize| (i * m + c) * n + j;
    let mut columns = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut col = zero_vector(field, n * m * n);
            for (c, p, q) in a.comult_basis(i) {
                axpy_at(&mut col, c, &f.matrix.column(*q), |t| idx(*p, t, j));
            }
            for (d, r, s) in a.comult_basis(j) {
                axpy_at(&mut col, &-d, &f.matrix.column(*r), |t| idx(i, t, *s));
            }
            columns.push(col);
        }
    }
    n * n - Matrix::from_columns(field, n * m * n, &columns).rank()
}

fn axpy_at(out: &mut [Scalar], c: &Scalar, v: &[Scalar], at: impl Fn(usize) -> usize) {
    for (t, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
        let x = at(t);
        out[x] = &out[x] + &(c * y);
    }
}

/// Column span of `f`, checked for closure in the codomain.
pub fn image(f: &HopfMorphism) -> HopfSubalgebra {
    let span = Subspace::span(
        f.cod.field(),
        f.cod.dim(),
        (0..f.dom.dim()).map(|j| f.matrix.column(j)),
    );
    HopfSubalgebra::from_subspace(f.cod.clone(), span)
}

/// `(f * g)(x) = f(x₁) g(x₂)` for linear maps `C → A`.
pub fn convolution(coalg: &FinHopfAlgebra, alg: &FinHopfAlgebra, f: &Matrix, g: &Matrix) -> Matrix {
    assert_eq!((f.rows(), f.cols()), (alg.dim(), coalg.dim()));
    assert_eq!((g.rows(), g.cols()), (alg.dim(), coalg.dim()));
    let fc: Vec<Vector> = (0..coalg.dim()).map(|j| f.column(j)).collect();
    let gc: Vec<Vector> = (0..coalg.dim()).map(|j| g.column(j)).collect();
    let columns: Vec<Vector> = (0..coalg.dim())
        .map(|c| {
            let mut out = alg.zero();
            for (coef, j, k) in coalg.comult_basis(c) {
                axpy(&mut out, coef, &alg.mul(&fc[*j], &gc[*k]));
            }
            out
        })
        .collect();
    Matrix::from_columns(alg.field(), alg.dim(), &columns)
}

/// The convolution unit `u_A ∘ ε_C`.
pub fn convolution_unit(coalg: &FinHopfAlgebra, alg: &FinHopfAlgebra) -> Matrix {
    coalg.unit_counit_matrix(alg)
}

/// Solves `f * X = X * f = u ∘ ε` as one linear system.
pub fn convolution_inverse(
    coalg: &FinHopfAlgebra,
    alg: &FinHopfAlgebra,
    f: &Matrix,
) -> Result<Matrix> {
    let (nc, na) = (coalg.dim(), alg.dim());
    let field = alg.field();
    let unknowns = na * nc;
    let var = |r: usize, k: usize| r * nc + k;
    let fc: Vec<Vector> = (0..nc).map(|j| f.column(j)).collect();
    // products f(e_j) e_r and e_r f(e_j), cached per (j, r)
    let mut rows: Vec<Vector> = Vec::with_capacity(2 * nc * na);
    let mut rhs: Vector = Vec::with_capacity(2 * nc * na);
    for side in 0..2 {
        for c in 0..nc {
            let mut eqs = vec![zero_vector(field, unknowns); na];
            for (coef, j, k) in coalg.comult_basis(c) {
                // side 0: f(x₁) X(x₂); side 1: X(x₁) f(x₂)
                let (fixed, free) = if side == 0 { (*j, *k) } else { (*k, *j) };
                for r in 0..na {
                    let e_r = alg.basis(r);
                    let prod = if side == 0 {
                        alg.mul(&fc[fixed], &e_r)
                    } else {
                        alg.mul(&e_r, &fc[fixed])
                    };
                    for (t, p) in prod.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                        let v = var(r, free);
                        eqs[t][v] = &eqs[t][v] + &(coef * p);
                    }
                }
            }
            let target: Vector = alg.unit().iter().map(|u| u * &coalg.counit()[c]).collect();
            rows.extend(eqs);
            rhs.extend(target);
        }
    }
    let system = Matrix::from_rows(field, unknowns, rows)?;
    let x = system.solve(&rhs).ok_or(Error::NotInvertible)?;
    let mut inv = Matrix::zeros(field, na, nc);
    for r in 0..na {
        for k in 0..nc {
            inv[(r, k)] = x[var(r, k)].clone();
        }
    }
    Ok(inv)
}

/// The unique `f̄` with `f̄ ∘ q.proj = f`, when `f` vanishes on the ideal of `q`.
pub fn factor_through(f: &HopfMorphism, q: &Quotient) -> Result<HopfMorphism> {
    if !same_algebra(&f.dom, q.proj.dom()) {
        return Err(Error::NotComposable(
            "morphism and quotient have different domains".into(),
        ));
    }
    if !q.ideal.basis_vectors().all(|v| is_zero_vector(&f.apply(v))) {
        return Err(Error::DoesNotFactor);
    }
    let columns: Vec<Vector> = q
        .representatives
        .iter()
        .map(|&c| f.matrix.column(c))
        .collect();
    let induced = HopfMorphism::new(
        q.algebra.clone(),
        f.cod.clone(),
        Matrix::from_columns(f.cod.field(), f.cod.dim(), &columns),
    )?;
    if induced.compose(&q.proj)?.matrix != f.matrix {
        return Err(Error::DoesNotFactor);
    }
    Ok(induced)
}

/// Factors `f` through `dom / dom·K⁺`; the result's domain is that quotient.
pub fn induced_on_quotient(f: &HopfMorphism, k: &HopfSubalgebra) -> Result<HopfMorphism> {
    let q = quotient_by_normal(k)?;
    factor_through(f, &q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;
    use crate::groups::{group_algebra, FinGroup, GroupHom};

    const Q: Field = Field::Rational;

    fn ga(g: &FinGroup) -> Arc<FinHopfAlgebra> {
        Arc::new(group_algebra(g, Q))
    }

    #[test]
    fn kernel_of_identity_and_terminal_map() {
        let a = ga(&FinGroup::symmetric3());
        let id = HopfMorphism::identity(&a);
        assert_eq!(hopf_kernel(&id).dim(), 1);
        let k = Arc::new(FinHopfAlgebra::base_field(Q));
        let eps = HopfMorphism::trivial(&a, &k);
        assert!(eps.is_valid());
        assert_eq!(hopf_kernel(&eps).dim(), 6);
    }

    #[test]
    fn q8_to_v4_kernel() {
        let (q8, v4) = (FinGroup::quaternion(), FinGroup::klein_four());
        let phi = GroupHom::quaternion_to_klein();
        let f = phi.linearize(&ga(&q8), &ga(&v4)).unwrap();
        let ker = hopf_kernel(&f);
        assert_eq!(ker.dim(), 2);
        assert!(ker.is_normal());
        assert_eq!(
            ker.grouplike_labels(),
            Some(vec!["1".to_string(), "-1".to_string()])
        );
    }

    #[test]
    fn kernel_pair_dimensions() {
        let c4 = FinGroup::cyclic(4);
        let c2 = FinGroup::cyclic(2);
        let phi =
            GroupHom::new(Arc::new(c4.clone()), Arc::new(c2.clone()), vec![0, 1, 0, 1]).unwrap();
        let f = phi.linearize(&ga(&c4), &ga(&c2)).unwrap();
        // fibers {0,2}, {1,3}: 2² + 2² pairs
        let brute = (0..4)
            .flat_map(|g| (0..4).map(move |h| (g, h)))
            .filter(|&(g, h)| g % 2 == h % 2)
            .count();
        assert_eq!(brute, 8);
        let kp = kernel_pair(&f).unwrap();
        assert_eq!(kp.algebra().dim(), 8);
        assert_eq!(kernel_pair_dim(&f), 8);
        let id = HopfMorphism::identity(kp.pullback.pi1.cod());
        assert_eq!(kp.pullback.pi1.compose(&kp.refl).unwrap(), id);
        assert_eq!(kp.pullback.pi2.compose(&kp.refl).unwrap(), id);

        let a = f.dom().clone();
        assert_eq!(
            kernel_pair(&HopfMorphism::identity(&a))
                .unwrap()
                .algebra()
                .dim(),
            4
        );
        let k = Arc::new(FinHopfAlgebra::base_field(Q));
        assert_eq!(
            kernel_pair(&HopfMorphism::trivial(&a, &k))
                .unwrap()
                .algebra()
                .dim(),
            16
        );
    }

    #[test]
    fn image_examples() {
        let (c2, c4) = (FinGroup::cyclic(2), FinGroup::cyclic(4));
        let phi = GroupHom::new(Arc::new(c2.clone()), Arc::new(c4.clone()), vec![0, 2]).unwrap();
        let f = phi.linearize(&ga(&c2), &ga(&c4)).unwrap();
        let im = image(&f);
        assert_eq!(im.dim(), 2);
        assert_eq!(
            im.grouplike_labels(),
            Some(vec!["e".to_string(), "x^2".to_string()])
        );
        let k = Arc::new(FinHopfAlgebra::base_field(Q));
        let a = ga(&c4);
        assert_eq!(image(&HopfMorphism::trivial(&k, &a)).dim(), 1);
        assert_eq!(image(&HopfMorphism::identity(&a)).dim(), 4);
    }

    #[test]
    fn convolution_inverse_examples() {
        let a = ga(&FinGroup::symmetric3());
        let id = Matrix::identity(Q, a.dim());
        assert_eq!(&convolution_inverse(&a, &a, &id).unwrap(), a.antipode());
        let ue = convolution_unit(&a, &a);
        assert_eq!(convolution_inverse(&a, &a, &ue).unwrap(), ue);

        let (c2, c4) = (ga(&FinGroup::cyclic(2)), ga(&FinGroup::cyclic(4)));
        // j(1) = 1, j(g) = x
        let mut j = Matrix::zeros(Q, 4, 2);
        j[(0, 0)] = Q.one();
        j[(1, 1)] = Q.one();
        let inv = convolution_inverse(&c2, &c4, &j).unwrap();
        assert_eq!(inv.column(1), c4.basis(3));
        assert!(convolution_inverse(&c2, &c4, &Matrix::zeros(Q, 4, 2)).is_err());
    }

    #[test]
    fn first_isomorphism_theorem() {
        let (q8, v4) = (FinGroup::quaternion(), FinGroup::klein_four());
        let f = GroupHom::quaternion_to_klein()
            .linearize(&ga(&q8), &ga(&v4))
            .unwrap();
        let induced = induced_on_quotient(&f, &hopf_kernel(&f)).unwrap();
        assert!(induced.is_isomorphism());
        let triv = HopfSubalgebra::trivial(f.dom().clone());
        let same = induced_on_quotient(&f, &triv).unwrap();
        assert_eq!(same.matrix(), f.matrix());
        let s3 = ga(&FinGroup::symmetric3());
        let k = Arc::new(FinHopfAlgebra::base_field(Q));
        let eps = HopfMorphism::trivial(&s3, &k);
        let comm = crate::subquot::huq_commutator(
            &HopfSubalgebra::whole(s3.clone()),
            &HopfSubalgebra::whole(s3.clone()),
        )
        .unwrap();
        let counit_h1 = induced_on_quotient(&eps, &comm).unwrap();
        assert_eq!(counit_h1.dom().dim(), 2);
        assert!(counit_h1.is_trivial());
        // the identity does not kill a nontrivial kernel
        assert_eq!(
            induced_on_quotient(&HopfMorphism::identity(&s3), &comm).unwrap_err(),
            Error::DoesNotFactor
        );
    }
}
