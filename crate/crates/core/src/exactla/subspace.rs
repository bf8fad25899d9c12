use super::matrix::{is_zero_vector, zero_vector, Matrix, Vector};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `field^ambient_dim`, stored by its reduced row
/// echelon basis. Equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span<I, V>(field: Field, ambient_dim: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Scalar]>,
    {
        let mut b = SubspaceBuilder::new(field, ambient_dim);
        for v in vectors {
            b.insert(v.as_ref());
        }
        b.finish()
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, k: usize) -> &[Scalar] {
        self.basis.row(k)
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut out = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(k)) {
                if !b.is_zero() {
                    *o = &*o - &(&c * b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn from_coords(&self, c: &[Scalar]) -> Vector {
        assert_eq!(c.len(), self.dim());
        let mut v = zero_vector(self.field(), self.ambient_dim);
        for (k, x) in c.iter().enumerate() {
            super::matrix::axpy(&mut v, x, self.basis.row(k));
        }
        v
    }

    /// Ambient coordinates not used as pivots, in increasing order. Their unit
    /// vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of `v` in `ambient / self`, relative to the
    /// complement basis of [`Subspace::complement_indices`].
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vector {
        let r = self.reduce(v);
        self.complement_indices()
            .into_iter()
            .map(|i| r[i].clone())
            .collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis_vectors().all(|v| other.contains(v))
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = SubspaceBuilder::from_subspace(self);
        for v in other.basis_vectors() {
            b.insert(v);
        }
        Ok(b.finish())
    }

    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let field = self.field();
        let (ra, rb) = (self.dim(), other.dim());
        if ra == 0 || rb == 0 {
            return Ok(Subspace::zero(field, self.ambient_dim));
        }
        // (x, y) with xA = yB, i.e. the kernel of [A; -B]^T.
        let mut stacked: Vec<Vector> = self.basis_vectors().map(<[Scalar]>::to_vec).collect();
        stacked.extend(
            other
                .basis_vectors()
                .map(|v| v.iter().map(|x| -x).collect::<Vector>()),
        );
        let m = Matrix::from_rows(field, self.ambient_dim, stacked)?.transpose();
        let ker = m.kernel_basis();
        let vectors = ker.basis_vectors().map(|xy| {
            let mut v = zero_vector(field, self.ambient_dim);
            for (k, c) in xy[..ra].iter().enumerate() {
                super::matrix::axpy(&mut v, c, self.basis.row(k));
            }
            v
        });
        let meet = Subspace::span(field, self.ambient_dim, vectors.collect::<Vec<_>>());
        debug_assert_eq!(meet.dim() + self.join(other)?.dim(), ra + rb);
        Ok(meet)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        Ok(())
    }
}

/// Incrementally maintained reduced echelon basis.
#[derive(Clone, Debug)]
pub struct SubspaceBuilder {
    field: Field,
    ambient_dim: usize,
    rows: Vec<(usize, Vector)>,
}

impl SubspaceBuilder {
    pub fn new(field: Field, ambient_dim: usize) -> Self {
        SubspaceBuilder {
            field,
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceBuilder {
            field: s.field(),
            ambient_dim: s.ambient_dim,
            rows: s
                .pivots
                .iter()
                .zip(s.basis_vectors())
                .map(|(&p, v)| (p, v.to_vec()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let c = w[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *o = &*o - &(&c * b);
                }
            }
        }
        let Some(q) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[q].inv().expect("nonzero");
        if !inv.is_one() {
            for x in w.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[q].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in row.iter_mut().zip(&w) {
                if !b.is_zero() {
                    *o = &*o - &(&c * b);
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < q);
        self.rows.insert(at, (q, w));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let c = w[*p].clone();
            if !c.is_zero() {
                super::matrix::axpy(&mut w, &-&c, row);
            }
        }
        is_zero_vector(&w)
    }

    pub fn finish(self) -> Subspace {
        let (pivots, rows): (Vec<usize>, Vec<Vector>) = self.rows.into_iter().unzip();
        Subspace {
            ambient_dim: self.ambient_dim,
            basis: Matrix::from_rows(self.field, self.ambient_dim, rows)
                .expect("rows have ambient length"),
            pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn meet_and_join_examples() {
        let full = Subspace::full(Q, 3);
        assert_eq!(full.meet(&full).unwrap(), full);

        let e0 = Subspace::span(Q, 2, [v(&[1, 0])]);
        let e1 = Subspace::span(Q, 2, [v(&[0, 1])]);
        assert_eq!(e0.meet(&e1).unwrap().dim(), 0);

        let a = Subspace::span(Q, 3, [v(&[1, 1, 0])]);
        let b = Subspace::span(Q, 3, [v(&[0, 1, 1])]);
        let j = a.join(&b).unwrap();
        // rank of [[1,1,0],[0,1,1]] is 2; its RREF is [[1,0,-1],[0,1,1]]
        assert_eq!(j.basis(), &Matrix::from_i64(Q, &[&[1, 0, -1], &[0, 1, 1]]));
        assert_eq!(j.pivots(), &[0, 1]);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(Q, 2);
        let b = Subspace::full(Q, 3);
        assert_eq!(a.meet(&b), Err(Error::AmbientMismatch(2, 3)));
        assert!(a.join(&b).is_err());
    }

    #[test]
    fn quotient_coords_kill_the_subspace() {
        let s = Subspace::span(Q, 3, [v(&[1, -1, 0])]);
        assert_eq!(s.complement_indices(), vec![1, 2]);
        assert_eq!(s.quotient_coords(&v(&[1, -1, 0])), v(&[0, 0]));
        assert_eq!(s.quotient_coords(&v(&[1, 0, 0])), v(&[1, 0]));
        assert_eq!(s.coords(&v(&[2, -2, 0])), Some(v(&[2])));
        assert_eq!(s.coords(&v(&[1, 0, 0])), None);
    }
}
