//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Basis elements are `e_0 … e_{n-1}`. Products are stored as sparse
//! coefficient lists per basis pair, so group algebras multiply by a single
//! lookup. Tensors in `A⊗A` use the index `j * n + k` for `e_j ⊗ e_k`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, unit_vector, zero_vector, Field, Matrix, Scalar, Vector};

/// Sparse vector: sorted `(index, coefficient)` pairs with no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Terms `c · e_j ⊗ e_k` of a comultiplication.
pub type ComultTerms = Vec<(Scalar, usize, usize)>;

/// Raw structure constants, before validation.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub field: Field,
    pub dim: usize,
    /// `mult[i * dim + j]` is `e_i · e_j`.
    pub mult: Vec<SparseVec>,
    pub unit: Vector,
    pub comult: Vec<ComultTerms>,
    pub counit: Vector,
    pub antipode: Matrix,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopfAlgebra {
    field: Field,
    dim: usize,
    mult: Vec<SparseVec>,
    unit: Vector,
    comult: Vec<ComultTerms>,
    counit: Vector,
    antipode: Matrix,
    labels: Option<Vec<String>>,
}

/// Outcome of [`FinHopfAlgebra::verify_axioms`]: one flag per identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub associative: bool,
    pub unital: bool,
    pub coassociative: bool,
    pub counital: bool,
    pub bialgebra: bool,
    pub antipode: bool,
    pub cocommutative: bool,
    pub commutative: bool,
    pub antipode_involutive: bool,
}

impl AxiomReport {
    /// All Hopf algebra axioms hold (commutativity flags are informational).
    pub fn is_hopf(&self) -> bool {
        self.associative
            && self.unital
            && self.coassociative
            && self.counital
            && self.bialgebra
            && self.antipode
    }

    fn failures(&self) -> String {
        let names = [
            (self.associative, "associativity"),
            (self.unital, "unitality"),
            (self.coassociative, "coassociativity"),
            (self.counital, "counitality"),
            (self.bialgebra, "bialgebra compatibility"),
            (self.antipode, "antipode"),
        ];
        names
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, n)| *n)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn normalize(mut v: Vec<(usize, Scalar)>) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d = &*d + &c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn normalize_terms(terms: ComultTerms) -> ComultTerms {
    let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
    for (c, j, k) in terms {
        add_to(&mut acc, (j, k), &c);
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((j, k), c)| (c, j, k))
        .collect()
}

pub(crate) fn add_to<K: Ord>(acc: &mut BTreeMap<K, Scalar>, key: K, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&key) {
        Some(x) => *x = &*x + c,
        None => {
            acc.insert(key, c.clone());
        }
    }
}

pub(crate) fn pruned<K: Ord>(mut acc: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    acc.retain(|_, c| !c.is_zero());
    acc
}

impl FinHopfAlgebra {
    /// Checks shapes only; see [`FinHopfAlgebra::new`] for the validated path.
    pub fn from_data(data: HopfData) -> Result<Self> {
        let n = data.dim;
        let bad = |m: String| Err(Error::MalformedStructure(m));
        if n == 0 {
            return bad(
                "zero-dimensional algebras are not allowed; use the 1-dimensional base field"
                    .into(),
            );
        }
        if data.mult.len() != n * n {
            return bad(format!(
                "expected {} products, got {}",
                n * n,
                data.mult.len()
            ));
        }
        if data.unit.len() != n || data.counit.len() != n || data.comult.len() != n {
            return bad(
                "unit, counit and comultiplication must have one entry per basis vector".into(),
            );
        }
        if data.antipode.rows() != n || data.antipode.cols() != n {
            return bad("antipode must be a square matrix of size dim".into());
        }
        if let Some(l) = &data.labels {
            if l.len() != n {
                return bad(format!("expected {n} labels, got {}", l.len()));
            }
        }
        let out_of_range = data.mult.iter().flatten().any(|(i, _)| *i >= n)
            || data
                .comult
                .iter()
                .flatten()
                .any(|(_, j, k)| *j >= n || *k >= n);
        if out_of_range {
            return bad("basis index out of range".into());
        }
        let field = data.field;
        let foreign = data
            .mult
            .iter()
            .flatten()
            .map(|(_, c)| c)
            .chain(data.comult.iter().flatten().map(|(c, _, _)| c))
            .chain(&data.unit)
            .chain(&data.counit)
            .find(|c| c.field() != field);
        if let Some(c) = foreign {
            return Err(Error::FieldMismatch(c.field(), field));
        }
        if data.antipode.field() != field {
            return Err(Error::FieldMismatch(data.antipode.field(), field));
        }
        Ok(FinHopfAlgebra {
            field,
            dim: n,
            mult: data.mult.into_iter().map(normalize).collect(),
            unit: data.unit,
            comult: data.comult.into_iter().map(normalize_terms).collect(),
            counit: data.counit,
            antipode: data.antipode,
            labels: data.labels,
        })
    }

    /// Shape checks plus every Hopf axiom.
    pub fn new(data: HopfData) -> Result<Self> {
        let a = Self::from_data(data)?;
        let report = a.verify_axioms();
        if !report.is_hopf() {
            return Err(Error::AxiomFailure(report.failures()));
        }
        Ok(a)
    }

    /// The base field as a 1-dimensional Hopf algebra (the zero object).
    pub fn base_field(field: Field) -> Self {
        let one = field.one();
        FinHopfAlgebra {
            field,
            dim: 1,
            mult: vec![vec![(0, one.clone())]],
            unit: vec![one.clone()],
            comult: vec![vec![(one.clone(), 0, 0)]],
            counit: vec![one],
            antipode: Matrix::identity(field, 1),
            labels: Some(vec!["1".into()]),
        }
    }

    pub fn to_data(&self) -> HopfData {
        HopfData {
            field: self.field,
            dim: self.dim,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim).map(|i| self.label(i)).collect()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_basis(&self, i: usize) -> &ComultTerms {
        &self.comult[i]
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.field, self.dim)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.mult_basis(i, j) {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, xs: &[&[Scalar]]) -> Vector {
        xs.iter()
            .fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        x.iter()
            .zip(&self.counit)
            .fold(self.field.zero(), |acc, (a, e)| &acc + &(a * e))
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vector {
        self.antipode.apply(x)
    }

    /// `Δ(x)` as merged sparse terms.
    pub fn comul(&self, x: &[Scalar]) -> ComultTerms {
        let mut acc = BTreeMap::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (c, j, k) in &self.comult[i] {
                add_to(&mut acc, (*j, *k), &(a * c));
            }
        }
        pruned(acc)
            .into_iter()
            .map(|((j, k), c)| (c, j, k))
            .collect()
    }

    /// `Δ(x)` as a dense vector of length `n²`.
    pub fn comul_dense(&self, x: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(self.field, n * n);
        for (c, j, k) in self.comul(x) {
            out[j * n + k] = c;
        }
        out
    }

    /// `Δ²(x) = x₁ ⊗ x₂ ⊗ x₃` as sparse terms.
    pub fn comul2(&self, x: &[Scalar]) -> Vec<(Scalar, usize, usize, usize)> {
        let mut acc = BTreeMap::new();
        for (c, j, k) in self.comul(x) {
            for (d, a, b) in &self.comult[j] {
                add_to(&mut acc, (*a, *b, k), &(&c * d));
            }
        }
        pruned(acc)
            .into_iter()
            .map(|((a, b, k), c)| (c, a, b, k))
            .collect()
    }

    /// Product of two elements of `A⊗A` given as dense tensors.
    pub fn mul_tensor(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(self.field, n * n);
        let nz = |t: &[Scalar]| -> Vec<(usize, usize, Scalar)> {
            t.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| (idx / n, idx % n, c.clone()))
                .collect()
        };
        let (xs, ys) = (nz(x), nz(y));
        for (a, b, c) in &xs {
            for (a2, b2, d) in &ys {
                let cd = c * d;
                for (p, u) in self.mult_basis(*a, *a2) {
                    for (q, v) in self.mult_basis(*b, *b2) {
                        let idx = p * n + q;
                        out[idx] = &out[idx] + &(&cd * &(u * v));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `u_cod ∘ ε_self`.
    pub fn unit_counit_matrix(&self, cod: &FinHopfAlgebra) -> Matrix {
        let mut m = Matrix::zeros(self.field, cod.dim, self.dim);
        for (j, e) in self.counit.iter().enumerate() {
            for (i, u) in cod.unit.iter().enumerate() {
                m[(i, j)] = u * e;
            }
        }
        m
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.dim;
        let field = self.field;
        let one = field.one();

        let prod_sparse = |xs: &SparseVec, k: usize, left: bool| -> BTreeMap<usize, Scalar> {
            let mut acc = BTreeMap::new();
            for (l, c) in xs {
                let m = if left {
                    self.mult_basis(*l, k)
                } else {
                    self.mult_basis(k, *l)
                };
                for (r, d) in m {
                    add_to(&mut acc, *r, &(c * d));
                }
            }
            pruned(acc)
        };

        let associative = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    // (e_i e_j) e_k  vs  e_i (e_j e_k)
                    prod_sparse(self.mult_basis(i, j), k, true)
                        == prod_sparse(self.mult_basis(j, k), i, false)
                })
            })
        });

        let unital = (0..n).all(|i| {
            let e = self.basis(i);
            self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e
        });

        let coassociative = (0..n).all(|i| {
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            for (c, j, k) in &self.comult[i] {
                for (d, a, b) in &self.comult[*j] {
                    add_to(&mut left, (*a, *b, *k), &(c * d));
                }
                for (d, a, b) in &self.comult[*k] {
                    add_to(&mut right, (*j, *a, *b), &(c * d));
                }
            }
            pruned(left) == pruned(right)
        });

        let counital = (0..n).all(|i| {
            let mut l = self.zero();
            let mut r = self.zero();
            for (c, j, k) in &self.comult[i] {
                l[*k] = &l[*k] + &(c * &self.counit[*j]);
                r[*j] = &r[*j] + &(c * &self.counit[*k]);
            }
            let e = self.basis(i);
            l == e && r == e
        });

        let bialgebra = {
            let unit_ok = self.comul(&self.unit) == {
                let mut acc = BTreeMap::new();
                for (a, x) in self.unit.iter().enumerate() {
                    for (b, y) in self.unit.iter().enumerate() {
                        add_to(&mut acc, (a, b), &(x * y));
                    }
                }
                pruned(acc)
                    .into_iter()
                    .map(|((j, k), c)| (c, j, k))
                    .collect::<ComultTerms>()
            } && self.counit_of(&self.unit) == one;
            unit_ok
                && (0..n).all(|i| {
                    (0..n).all(|j| {
                        let prod: Vector = {
                            let mut v = self.zero();
                            for (k, c) in self.mult_basis(i, j) {
                                v[*k] = c.clone();
                            }
                            v
                        };
                        if self.counit_of(&prod) != &self.counit[i] * &self.counit[j] {
                            return false;
                        }
                        let lhs = self.comul(&prod);
                        let mut rhs = BTreeMap::new();
                        for (c, a, b) in &self.comult[i] {
                            for (d, a2, b2) in &self.comult[j] {
                                let cd = c * d;
                                for (p, u) in self.mult_basis(*a, *a2) {
                                    for (q, v) in self.mult_basis(*b, *b2) {
                                        add_to(&mut rhs, (*p, *q), &(&cd * &(u * v)));
                                    }
                                }
                            }
                        }
                        let rhs: ComultTerms = pruned(rhs)
                            .into_iter()
                            .map(|((p, q), c)| (c, p, q))
                            .collect();
                        lhs == rhs
                    })
                })
        };

        let s_cols: Vec<Vector> = (0..n).map(|j| self.antipode.column(j)).collect();
        let antipode = (0..n).all(|i| {
            let target: Vector = self.unit.iter().map(|u| u * &self.counit[i]).collect();
            let mut l = self.zero();
            let mut r = self.zero();
            for (c, j, k) in &self.comult[i] {
                let sl = self.mul(&s_cols[*j], &self.basis(*k));
                let sr = self.mul(&self.basis(*j), &s_cols[*k]);
                crate::exactla::axpy(&mut l, c, &sl);
                crate::exactla::axpy(&mut r, c, &sr);
            }
            l == target && r == target
        });

        let cocommutative = (0..n).all(|i| {
            let flipped = normalize_terms(
                self.comult[i]
                    .iter()
                    .map(|(c, j, k)| (c.clone(), *k, *j))
                    .collect(),
            );
            flipped == self.comult[i]
        });
        let commutative =
            (0..n).all(|i| (0..n).all(|j| self.mult_basis(i, j) == self.mult_basis(j, i)));
        let antipode_involutive = self.antipode.mul(&self.antipode).is_identity();

        AxiomReport {
            associative,
            unital,
            coassociative,
            counital,
            bialgebra,
            antipode,
            cocommutative,
            commutative,
            antipode_involutive,
        }
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            normalize_terms(
                self.comult[i]
                    .iter()
                    .map(|(c, j, k)| (c.clone(), *k, *j))
                    .collect(),
            ) == self.comult[i]
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mult_basis(i, j) == self.mult_basis(j, i)))
    }

    /// Basis vectors (suitably rescaled) that are group-like.
    ///
    /// Exact when the basis itself consists of group-likes, as for group
    /// algebras and everything derived from them here. Group-likes that are
    /// not multiples of basis vectors are not found, apart from the unit.
    pub fn grouplikes(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::new();
        for i in 0..self.dim {
            let terms = &self.comult[i];
            if terms.len() != 1 {
                continue;
            }
            let (c, j, k) = &terms[0];
            if *j != i || *k != i {
                continue;
            }
            // Δ(c e_i) = c e_i ⊗ c e_i, and ε(c e_i) must be 1.
            if (c * &self.counit[i]).is_one() {
                let mut v = self.zero();
                v[i] = c.clone();
                out.push(v);
            }
        }
        if !out.contains(&self.unit) {
            out.insert(0, self.unit.clone());
        }
        out
    }

    pub fn is_grouplike(&self, x: &[Scalar]) -> bool {
        if is_zero_vector(x) || !self.counit_of(x).is_one() {
            return false;
        }
        let n = self.dim;
        let mut xx = zero_vector(self.field, n * n);
        for (a, p) in x.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (b, q) in x.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                xx[a * n + b] = p * q;
            }
        }
        self.comul_dense(x) == xx
    }
}

impl fmt::Display for FinHopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hopf algebra of dimension {} over {}",
            self.dim, self.field
        )
    }
}

/// `A ⊗ B` with componentwise structure; basis index `a * dim(B) + b`.
pub fn tensor_product(a: &FinHopfAlgebra, b: &FinHopfAlgebra) -> Result<FinHopfAlgebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field, b.field));
    }
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    let idx = |i: usize, j: usize| i * nb + j;
    let mut mult = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            let (ya, yb) = (y / nb, y % nb);
            let mut v = Vec::new();
            for (p, c) in a.mult_basis(xa, ya) {
                for (q, d) in b.mult_basis(xb, yb) {
                    v.push((idx(*p, *q), c * d));
                }
            }
            mult.push(v);
        }
    }
    let mut unit = zero_vector(a.field, n);
    let mut counit = zero_vector(a.field, n);
    let mut comult = Vec::with_capacity(n);
    let mut antipode = Matrix::zeros(a.field, n, n);
    for i in 0..na {
        for j in 0..nb {
            unit[idx(i, j)] = &a.unit[i] * &b.unit[j];
            counit[idx(i, j)] = &a.counit[i] * &b.counit[j];
            let mut terms = Vec::new();
            for (c, a1, a2) in &a.comult[i] {
                for (d, b1, b2) in &b.comult[j] {
                    terms.push((c * d, idx(*a1, *b1), idx(*a2, *b2)));
                }
            }
            comult.push(terms);
            for i2 in 0..na {
                for j2 in 0..nb {
                    antipode[(idx(i2, j2), idx(i, j))] =
                        &a.antipode[(i2, i)] * &b.antipode[(j2, j)];
                }
            }
        }
    }
    let labels = (0..na)
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}⊗{}", a.label(i), b.label(j)))
        .collect();
    FinHopfAlgebra::from_data(HopfData {
        field: a.field,
        dim: n,
        mult,
        unit,
        comult,
        counit,
        antipode,
        labels: Some(labels),
    })
}

/// `A^op`; its antipode is `S⁻¹`.
pub fn opposite(a: &FinHopfAlgebra) -> Result<FinHopfAlgebra> {
    let n = a.dim;
    let mut data = a.to_data();
    data.mult = (0..n * n)
        .map(|x| a.mult_basis(x % n, x / n).clone())
        .collect();
    data.antipode = a.antipode.inverse().ok_or(Error::NotInvertible)?;
    FinHopfAlgebra::from_data(data)
}

/// `A^cop`; its antipode is `S⁻¹`.
pub fn coopposite(a: &FinHopfAlgebra) -> Result<FinHopfAlgebra> {
    let mut data = a.to_data();
    data.comult = a
        .comult
        .iter()
        .map(|t| t.iter().map(|(c, j, k)| (c.clone(), *k, *j)).collect())
        .collect();
    data.antipode = a.antipode.inverse().ok_or(Error::NotInvertible)?;
    FinHopfAlgebra::from_data(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    /// ℚ[C₂] written out by hand: basis {1, g}, g² = 1.
    fn c2() -> FinHopfAlgebra {
        let one = Q.one();
        let mult = vec![
            vec![(0, one.clone())],
            vec![(1, one.clone())],
            vec![(1, one.clone())],
            vec![(0, one.clone())],
        ];
        FinHopfAlgebra::new(HopfData {
            field: Q,
            dim: 2,
            mult,
            unit: vec![Q.one(), Q.zero()],
            comult: vec![vec![(one.clone(), 0, 0)], vec![(one.clone(), 1, 1)]],
            counit: vec![Q.one(), Q.one()],
            antipode: Matrix::identity(Q, 2),
            labels: Some(vec!["1".into(), "g".into()]),
        })
        .unwrap()
    }

    #[test]
    fn c2_by_hand_passes() {
        let r = c2().verify_axioms();
        assert!(r.is_hopf() && r.cocommutative && r.commutative && r.antipode_involutive);
    }

    #[test]
    fn base_field_passes() {
        let k = FinHopfAlgebra::base_field(Q);
        assert!(k.verify_axioms().is_hopf());
        assert_eq!(k.grouplikes(), vec![vec![Q.one()]]);
    }

    #[test]
    fn malformed_inputs_rejected() {
        let mut d = c2().to_data();
        d.mult.pop();
        assert!(matches!(
            FinHopfAlgebra::from_data(d),
            Err(Error::MalformedStructure(_))
        ));
        let mut d = c2().to_data();
        d.dim = 0;
        assert!(FinHopfAlgebra::from_data(d).is_err());
        let mut d = c2().to_data();
        d.counit = vec![Q.one(), Q.zero()];
        assert!(matches!(
            FinHopfAlgebra::new(d),
            Err(Error::AxiomFailure(_))
        ));
    }

    #[test]
    fn tensor_dimension_and_unitor() {
        let a = c2();
        let t = tensor_product(&FinHopfAlgebra::base_field(Q), &a).unwrap();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.mult, a.mult);
        let aa = tensor_product(&a, &a).unwrap();
        assert_eq!(aa.dim(), 4);
        assert!(aa.verify_axioms().is_hopf());
        assert!(tensor_product(&a, &FinHopfAlgebra::base_field(Field::Prime(2))).is_err());
    }

    #[test]
    fn opposite_involution() {
        let a = c2();
        let op = opposite(&opposite(&a).unwrap()).unwrap();
        assert_eq!(op, a);
        assert_eq!(coopposite(&a).unwrap(), a);
    }
}
