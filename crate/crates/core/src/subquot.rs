//! Hopf subalgebras, commutators, centers and quotients by normal Hopf subalgebras.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{
    axpy, is_zero_vector, sub_vectors, Matrix, Scalar, Subspace, SubspaceBuilder, Vector,
};
use crate::hopf_core::{FinHopfAlgebra, HopfData, SparseVec};
use crate::morphism::{same_algebra, HopfMorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Yes,
    No,
    Unchecked,
}

impl From<bool> for Flag {
    fn from(b: bool) -> Self {
        if b {
            Flag::Yes
        } else {
            Flag::No
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubFlags {
    pub contains_unit: Flag,
    pub mult_closed: Flag,
    pub comult_closed: Flag,
    pub antipode_closed: Flag,
    pub normal: Flag,
}

/// A subspace of a Hopf algebra together with its closure properties.
#[derive(Clone, Debug)]
pub struct HopfSubalgebra {
    parent: Arc<FinHopfAlgebra>,
    subspace: Subspace,
    flags: SubFlags,
}

/// A Hopf subalgebra realised as a standalone algebra with its inclusion.
#[derive(Clone, Debug)]
pub struct Restricted {
    pub algebra: Arc<FinHopfAlgebra>,
    pub inclusion: HopfMorphism,
}

impl PartialEq for HopfSubalgebra {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.parent, &other.parent) && self.subspace == other.subspace
    }
}

impl HopfSubalgebra {
    /// Wraps a subspace and computes every closure flag.
    pub fn from_subspace(parent: Arc<FinHopfAlgebra>, subspace: Subspace) -> Self {
        assert_eq!(
            subspace.ambient_dim(),
            parent.dim(),
            "subspace lives in a different ambient space"
        );
        let a = &parent;
        let basis: Vec<&[Scalar]> = subspace.basis_vectors().collect();
        let contains_unit = subspace.contains(a.unit());
        let mult_closed = basis
            .iter()
            .all(|x| basis.iter().all(|y| subspace.contains(&a.mul(x, y))));
        let comult_closed = basis
            .iter()
            .all(|x| tensor_in(&subspace, &a.comul_dense(x), a.dim()));
        let antipode_closed = basis.iter().all(|x| subspace.contains(&a.antipode_of(x)));
        let hopf = contains_unit && mult_closed && comult_closed && antipode_closed;
        let normal = if hopf {
            Flag::from(adjoint_stable(a, &subspace))
        } else {
            Flag::Unchecked
        };
        let flags = SubFlags {
            contains_unit: contains_unit.into(),
            mult_closed: mult_closed.into(),
            comult_closed: comult_closed.into(),
            antipode_closed: antipode_closed.into(),
            normal,
        };
        HopfSubalgebra {
            parent,
            subspace,
            flags,
        }
    }

    /// Like [`HopfSubalgebra::from_subspace`] but fails unless the subspace is a Hopf subalgebra.
    pub fn new(parent: Arc<FinHopfAlgebra>, subspace: Subspace) -> Result<Self> {
        let sub = Self::from_subspace(parent, subspace);
        if !sub.is_hopf_subalgebra() {
            return Err(Error::NotHopfSubalgebra(format!("{:?}", sub.flags)));
        }
        Ok(sub)
    }

    pub fn whole(parent: Arc<FinHopfAlgebra>) -> Self {
        let s = Subspace::full(parent.field(), parent.dim());
        Self::from_subspace(parent, s)
    }

    /// The scalar multiples of the unit.
    pub fn trivial(parent: Arc<FinHopfAlgebra>) -> Self {
        let s = Subspace::span(parent.field(), parent.dim(), [parent.unit().clone()]);
        Self::from_subspace(parent, s)
    }

    pub fn parent(&self) -> &Arc<FinHopfAlgebra> {
        &self.parent
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn flags(&self) -> SubFlags {
        self.flags
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn is_hopf_subalgebra(&self) -> bool {
        let f = self.flags;
        [
            f.contains_unit,
            f.mult_closed,
            f.comult_closed,
            f.antipode_closed,
        ]
        .iter()
        .all(|&x| x == Flag::Yes)
    }

    pub fn is_normal(&self) -> bool {
        self.flags.normal == Flag::Yes
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.subspace.contains(x)
    }

    pub fn is_contained_in(&self, other: &HopfSubalgebra) -> bool {
        same_algebra(&self.parent, &other.parent) && self.subspace.is_subspace_of(&other.subspace)
    }

    pub fn meet(&self, other: &HopfSubalgebra) -> Result<HopfSubalgebra> {
        if !same_algebra(&self.parent, &other.parent) {
            return Err(Error::AmbientMismatch(
                self.parent.dim(),
                other.parent.dim(),
            ));
        }
        Ok(Self::from_subspace(
            self.parent.clone(),
            self.subspace.meet(&other.subspace)?,
        ))
    }

    /// `K⁺ = K ∩ ker ε`, spanned by `k - ε(k)1`.
    pub fn augmentation(&self) -> Subspace {
        let a = &self.parent;
        Subspace::span(
            a.field(),
            a.dim(),
            self.subspace.basis_vectors().map(|k| {
                let e = a.counit_of(k);
                let shifted: Vector = a.unit().iter().map(|u| u * &e).collect();
                sub_vectors(k, &shifted)
            }),
        )
    }

    /// Parent labels of the basis when every basis vector is a single parent basis element.
    pub fn grouplike_labels(&self) -> Option<Vec<String>> {
        self.subspace
            .basis_vectors()
            .map(|v| {
                let mut nz = v.iter().enumerate().filter(|(_, x)| !x.is_zero());
                match (nz.next(), nz.next()) {
                    (Some((i, x)), None) if x.is_one() => Some(self.parent.label(i)),
                    _ => None,
                }
            })
            .collect()
    }

    /// Transports the structure onto the RREF basis of the subspace.
    pub fn restrict(&self) -> Result<Restricted> {
        if !self.is_hopf_subalgebra() {
            return Err(Error::NotHopfSubalgebra(format!("{:?}", self.flags)));
        }
        let a = &self.parent;
        let s = &self.subspace;
        let r = s.dim();
        let field = a.field();
        let coords = |v: &[Scalar]| {
            s.coords(v)
                .ok_or_else(|| Error::Inconsistent("closure flag disagrees with membership".into()))
        };
        let basis: Vec<&[Scalar]> = s.basis_vectors().collect();
        let mut mult = Vec::with_capacity(r * r);
        for x in &basis {
            for y in &basis {
                mult.push(sparse(&coords(&a.mul(x, y))?));
            }
        }
        let pivots = s.pivots();
        let n = a.dim();
        let comult = basis
            .iter()
            .map(|x| {
                let d = a.comul_dense(x);
                let mut terms = Vec::new();
                for (i, &pi) in pivots.iter().enumerate() {
                    for (j, &pj) in pivots.iter().enumerate() {
                        let c = &d[pi * n + pj];
                        if !c.is_zero() {
                            terms.push((c.clone(), i, j));
                        }
                    }
                }
                terms
            })
            .collect();
        let counit = basis.iter().map(|x| a.counit_of(x)).collect();
        let s_cols: Vec<Vector> = basis
            .iter()
            .map(|x| coords(&a.antipode_of(x)))
            .collect::<Result<_>>()?;
        let labels = self
            .grouplike_labels()
            .unwrap_or_else(|| (0..r).map(|k| format!("v{k}")).collect());
        let algebra = Arc::new(FinHopfAlgebra::new(HopfData {
            field,
            dim: r,
            mult,
            unit: coords(a.unit())?,
            comult,
            counit,
            antipode: Matrix::from_columns(field, r, &s_cols),
            labels: Some(labels),
        })?);
        let incl_cols: Vec<Vector> = basis.iter().map(|x| x.to_vec()).collect();
        let inclusion = HopfMorphism::new(
            algebra.clone(),
            a.clone(),
            Matrix::from_columns(field, n, &incl_cols),
        )?;
        Ok(Restricted { algebra, inclusion })
    }
}

fn sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Whether a dense tensor in `A ⊗ A` lies in `K ⊗ K`.
fn tensor_in(k: &Subspace, t: &[Scalar], n: usize) -> bool {
    // K ⊗ A ∩ A ⊗ K = K ⊗ K: check every row slice and every column slice
    let rows: Vec<Vector> = (0..n).map(|i| t[i * n..(i + 1) * n].to_vec()).collect();
    if !rows.iter().all(|row| k.contains(row)) {
        return false;
    }
    (0..n).all(|j| {
        let col: Vector = (0..n).map(|i| t[i * n + j].clone()).collect();
        k.contains(&col)
    })
}

/// `a₁ x S(a₂) ∈ K` for every basis element `a` and every `x ∈ K`.
fn adjoint_stable(a: &FinHopfAlgebra, k: &Subspace) -> bool {
    (0..a.dim()).all(|i| {
        let terms = a.comult_basis(i);
        k.basis_vectors().all(|x| {
            let mut acc = a.zero();
            for (c, j, l) in terms {
                let y = a.mul_all(&[&a.basis(*j), x, &a.antipode().column(*l)]);
                axpy(&mut acc, c, &y);
            }
            k.contains(&acc)
        })
    })
}

/// Smallest unital subalgebra containing `seed`.
pub fn algebra_closure(parent: &Arc<FinHopfAlgebra>, seed: &Subspace) -> HopfSubalgebra {
    let a = parent;
    let mut builder = SubspaceBuilder::from_subspace(seed);
    builder.insert(a.unit());
    let mut all: Vec<Vector> = builder
        .clone()
        .finish()
        .basis_vectors()
        .map(|v| v.to_vec())
        .collect();
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for x in &frontier {
            for y in &all {
                for p in [a.mul(x, y), a.mul(y, x)] {
                    if builder.insert(&p) {
                        fresh.push(p);
                    }
                }
            }
        }
        all.extend(fresh.iter().cloned());
        frontier = fresh;
    }
    HopfSubalgebra::from_subspace(a.clone(), builder.finish())
}

/// Huq commutator `[X, Y]`: the subalgebra generated by `x₁ y₁ S(x₂) S(y₂)`.
pub fn huq_commutator(x: &HopfSubalgebra, y: &HopfSubalgebra) -> Result<HopfSubalgebra> {
    if !same_algebra(&x.parent, &y.parent) {
        return Err(Error::AmbientMismatch(x.parent.dim(), y.parent.dim()));
    }
    let a = &x.parent;
    let s_cols: Vec<Vector> = (0..a.dim()).map(|j| a.antipode().column(j)).collect();
    let mut gens = SubspaceBuilder::new(a.field(), a.dim());
    for u in x.subspace.basis_vectors() {
        let du = a.comul(u);
        for v in y.subspace.basis_vectors() {
            let dv = a.comul(v);
            let mut acc = a.zero();
            for (c, u1, u2) in &du {
                for (d, v1, v2) in &dv {
                    let p = a.mul_all(&[&a.basis(*u1), &a.basis(*v1), &s_cols[*u2], &s_cols[*v2]]);
                    axpy(&mut acc, &(c * d), &p);
                }
            }
            gens.insert(&acc);
        }
    }
    Ok(algebra_closure(a, &gens.finish()))
}

/// The center `Z(A)` as a subspace with its closure flags.
pub fn center(a: &Arc<FinHopfAlgebra>) -> HopfSubalgebra {
    let n = a.dim();
    let columns: Vec<Vector> = (0..n)
        .map(|j| {
            let ej = a.basis(j);
            (0..n)
                .flat_map(|i| {
                    let ei = a.basis(i);
                    sub_vectors(&a.mul(&ej, &ei), &a.mul(&ei, &ej))
                })
                .collect()
        })
        .collect();
    let z = Matrix::from_columns(a.field(), n * n, &columns).kernel_basis();
    HopfSubalgebra::from_subspace(a.clone(), z)
}

/// `A / A·K⁺` with its projection. The quotient basis is the classes of the
/// parent basis elements listed in `representatives`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Arc<FinHopfAlgebra>,
    pub proj: HopfMorphism,
    pub ideal: Subspace,
    pub representatives: Vec<usize>,
}

pub fn quotient_by_normal(k: &HopfSubalgebra) -> Result<Quotient> {
    if !k.is_hopf_subalgebra() {
        return Err(Error::NotHopfSubalgebra(format!("{:?}", k.flags)));
    }
    if !k.is_normal() {
        return Err(Error::NotNormal);
    }
    let a = &k.parent;
    let n = a.dim();
    let field = a.field();
    let plus: Vec<Vector> = k
        .augmentation()
        .basis_vectors()
        .map(|v| v.to_vec())
        .collect();
    let mut ideal = SubspaceBuilder::new(field, n);
    for i in 0..n {
        let ei = a.basis(i);
        for x in &plus {
            ideal.insert(&a.mul(&ei, x));
        }
    }
    let ideal = ideal.finish();
    let reps = ideal.complement_indices();
    let m = reps.len();
    let proj_cols: Vec<Vector> = (0..n).map(|j| ideal.quotient_coords(&a.basis(j))).collect();
    let mut mult = Vec::with_capacity(m * m);
    for &s in &reps {
        for &t in &reps {
            let mut p = a.zero();
            for (idx, c) in a.mult_basis(s, t) {
                p[*idx] = c.clone();
            }
            mult.push(sparse(&ideal.quotient_coords(&p)));
        }
    }
    let comult = reps
        .iter()
        .map(|&c| {
            let mut acc = std::collections::BTreeMap::new();
            for (coef, j, l) in a.comult_basis(c) {
                for (u, x) in proj_cols[*j]
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                {
                    for (v, y) in proj_cols[*l]
                        .iter()
                        .enumerate()
                        .filter(|(_, y)| !y.is_zero())
                    {
                        crate::hopf_core::add_to(&mut acc, (u, v), &(coef * &(x * y)));
                    }
                }
            }
            crate::hopf_core::pruned(acc)
                .into_iter()
                .map(|((u, v), c)| (c, u, v))
                .collect()
        })
        .collect();
    let s_cols: Vec<Vector> = reps
        .iter()
        .map(|&c| ideal.quotient_coords(&a.antipode().column(c)))
        .collect();
    let algebra = Arc::new(FinHopfAlgebra::new(HopfData {
        field,
        dim: m,
        mult,
        unit: ideal.quotient_coords(a.unit()),
        comult,
        counit: reps.iter().map(|&c| a.counit()[c].clone()).collect(),
        antipode: Matrix::from_columns(field, m, &s_cols),
        labels: Some(reps.iter().map(|&c| a.label(c)).collect()),
    })?);
    let proj = HopfMorphism::new(
        a.clone(),
        algebra.clone(),
        Matrix::from_columns(field, m, &proj_cols),
    )?;
    Ok(Quotient {
        algebra,
        proj,
        ideal,
        representatives: reps,
    })
}

/// `H₁(A) = A / A[A,A]⁺` with its unit map `η_A`.
pub fn abelianization(a: &Arc<FinHopfAlgebra>) -> Result<Quotient> {
    let whole = HopfSubalgebra::whole(a.clone());
    quotient_by_normal(&huq_commutator(&whole, &whole)?)
}

/// Whether `x` is zero modulo the ideal of a quotient.
pub fn in_ideal(q: &Quotient, x: &[Scalar]) -> bool {
    is_zero_vector(&q.ideal.quotient_coords(x))
}
