//! Smith normal form of integer matrices.
//!
//! Elimination runs on `i64` with checked arithmetic and restarts on
//! `BigInt` if any intermediate value overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    fn from_nested<T: Clone + Into<BigInt>>(rows: usize, cols: usize, nested: Vec<Vec<T>>) -> Self {
        let data = nested.into_iter().flatten().map(Into::into).collect();
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for (i, &r) in row_perm.iter().enumerate().take(self.rows) {
            for (j, &c) in col_perm.iter().enumerate().take(self.cols) {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Exact determinant by fraction-free elimination (square matrices only).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * prev
    }
}

/// `U · M · V = diag(d_1, …)` with `d_i | d_{i+1}` and `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` non-negative diagonal entries; zeros last.
    pub diag: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let nested: Vec<Vec<BigInt>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let small: Option<Vec<Vec<i64>>> = nested
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect())
        .collect();
    let track = Track {
        left: true,
        left_inverse: false,
        right: true,
    };
    let out = small
        .and_then(|s| Engine::run(s, m.cols, track))
        .unwrap_or_else(|| Engine::run(nested, m.cols, track).expect("BigInt never overflows"));
    SmithForm {
        diag: out.diag,
        u: IntMatrix::from_nested(m.rows, m.rows, out.u.expect("tracked")),
        v: IntMatrix::from_nested(m.cols, m.cols, out.v.expect("tracked")),
    }
}

/// Smith form with the row transform `U` and its inverse, skipping the
/// column transform; used when only the cokernel is needed.
pub(crate) struct LeftSmith {
    pub diag: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub u_inv: Vec<Vec<BigInt>>,
}

pub(crate) fn smith_left(rows: Vec<Vec<i64>>, cols: usize) -> LeftSmith {
    let track = Track {
        left: true,
        left_inverse: true,
        right: false,
    };
    let out = Engine::run(rows.clone(), cols, track).unwrap_or_else(|| {
        let big = rows
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        Engine::run(big, cols, track).expect("BigInt never overflows")
    });
    LeftSmith {
        diag: out.diag,
        u: out.u.expect("tracked"),
        u_inv: out.u_inv.expect("tracked"),
    }
}

#[derive(Clone, Copy)]
struct Track {
    left: bool,
    left_inverse: bool,
    right: bool,
}

trait SnfInt:
    Clone + Ord + Signed + Integer + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv + Into<BigInt>
{
}
impl<T> SnfInt for T where
    T: Clone
        + Ord
        + Signed
        + Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + Into<BigInt>
{
}

fn abs_of<T: SnfInt>(x: &T) -> Option<T> {
    if x.is_negative() {
        T::zero().checked_sub(x)
    } else {
        Some(x.clone())
    }
}

/// `dst -= q * src`, elementwise.
fn sub_mul<T: SnfInt>(dst: &mut [T], src: &[T], q: &T) -> Option<()> {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.checked_sub(&s.checked_mul(q)?)?;
        }
    }
    Some(())
}

struct Engine<T> {
    a: Vec<Vec<T>>,
    rows: usize,
    cols: usize,
    u: Option<Vec<Vec<T>>>,
    u_inv: Option<Vec<Vec<T>>>,
    v: Option<Vec<Vec<T>>>,
}

struct EngineOut<T> {
    diag: Vec<T>,
    u: Option<Vec<Vec<T>>>,
    u_inv: Option<Vec<Vec<T>>>,
    v: Option<Vec<Vec<T>>>,
}

fn identity<T: SnfInt>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect()
}

impl<T: SnfInt> Engine<T> {
    fn run(a: Vec<Vec<T>>, cols: usize, track: Track) -> Option<EngineOut<BigInt>>
    where
        T: Into<BigInt>,
    {
        let rows = a.len();
        let mut e = Engine {
            a,
            rows,
            cols,
            u: track.left.then(|| identity(rows)),
            u_inv: track.left_inverse.then(|| identity(rows)),
            v: track.right.then(|| identity(cols)),
        };
        let diag = e.eliminate()?;
        let conv = |m: Vec<Vec<T>>| -> Vec<Vec<BigInt>> {
            m.into_iter()
                .map(|r| r.into_iter().map(Into::into).collect())
                .collect()
        };
        Some(EngineOut {
            diag: diag.into_iter().map(Into::into).collect(),
            u: e.u.map(conv),
            u_inv: e.u_inv.map(conv),
            v: e.v.map(conv),
        })
    }

    /// `row_i -= q * row_t`
    fn row_addmul(&mut self, i: usize, t: usize, q: &T) -> Option<()> {
        let (src, dst) = pair_mut(&mut self.a, t, i);
        sub_mul(dst, src, q)?;
        if let Some(u) = self.u.as_mut() {
            let (src, dst) = pair_mut(u, t, i);
            sub_mul(dst, src, q)?;
        }
        if let Some(ui) = self.u_inv.as_mut() {
            // inverse elementary matrix on the right: col_t += q * col_i
            for r in ui.iter_mut() {
                if !r[i].is_zero() {
                    r[t] = r[t].checked_add(&r[i].checked_mul(q)?)?;
                }
            }
        }
        Some(())
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap(i, j);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            for r in ui.iter_mut() {
                r.swap(i, j);
            }
        }
    }

    fn row_negate(&mut self, i: usize) -> Option<()> {
        for x in self.a[i].iter_mut() {
            *x = T::zero().checked_sub(x)?;
        }
        if let Some(u) = self.u.as_mut() {
            for x in u[i].iter_mut() {
                *x = T::zero().checked_sub(x)?;
            }
        }
        if let Some(ui) = self.u_inv.as_mut() {
            for r in ui.iter_mut() {
                r[i] = T::zero().checked_sub(&r[i])?;
            }
        }
        Some(())
    }

    /// `col_j -= q * col_t`
    fn col_addmul(&mut self, j: usize, t: usize, q: &T) -> Option<()> {
        for r in self.a.iter_mut() {
            if !r[t].is_zero() {
                r[j] = r[j].checked_sub(&r[t].checked_mul(q)?)?;
            }
        }
        if let Some(v) = self.v.as_mut() {
            for r in v.iter_mut() {
                if !r[t].is_zero() {
                    r[j] = r[j].checked_sub(&r[t].checked_mul(q)?)?;
                }
            }
        }
        Some(())
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        if let Some(v) = self.v.as_mut() {
            for r in v.iter_mut() {
                r.swap(i, j);
            }
        }
    }

    fn min_entry(&self, t: usize) -> Option<Option<(usize, usize)>> {
        let mut best: Option<(T, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let ax = abs_of(x)?;
                if best.as_ref().is_none_or(|(b, _, _)| ax < *b) {
                    let unit = ax.is_one();
                    best = Some((ax, i, j));
                    if unit {
                        return Some(Some((i, j)));
                    }
                }
            }
        }
        Some(best.map(|(_, i, j)| (i, j)))
    }

    fn eliminate(&mut self) -> Option<Vec<T>> {
        let mut diag = Vec::new();
        let limit = self.rows.min(self.cols);
        let mut t = 0;
        while t < limit {
            let Some((pi, pj)) = self.min_entry(t)? else {
                break;
            };
            self.row_swap(t, pi);
            self.col_swap(t, pj);
            loop {
                self.clear_cross(t)?;
                // d_t must divide every remaining entry
                let p = self.a[t][t].clone();
                if abs_of(&p)?.is_one() {
                    break;
                }
                let offender = (t + 1..self.rows)
                    .find(|&i| self.a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&p)));
                match offender {
                    Some(i) => self.row_addmul(t, i, &(T::zero() - T::one()))?,
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.row_negate(t)?;
            }
            diag.push(self.a[t][t].clone());
            t += 1;
        }
        diag.resize(limit, T::zero());
        Some(diag)
    }

    /// Zeroes row `t` and column `t` outside the pivot.
    fn clear_cross(&mut self, t: usize) -> Option<()> {
        loop {
            let mut dirty = false;
            for i in t + 1..self.rows {
                if self.a[i][t].is_zero() {
                    continue;
                }
                let q = self.a[i][t].checked_div(&self.a[t][t])?;
                if !q.is_zero() {
                    self.row_addmul(i, t, &q)?;
                }
                dirty |= !self.a[i][t].is_zero();
            }
            for j in t + 1..self.cols {
                if self.a[t][j].is_zero() {
                    continue;
                }
                let q = self.a[t][j].checked_div(&self.a[t][t])?;
                if !q.is_zero() {
                    self.col_addmul(j, t, &q)?;
                }
                dirty |= !self.a[t][j].is_zero();
            }
            if !dirty {
                return Some(());
            }
            // move the smallest leftover of the cross into the pivot
            let mut best: Option<(T, bool, usize)> = None;
            for i in t + 1..self.rows {
                if !self.a[i][t].is_zero() {
                    let ax = abs_of(&self.a[i][t])?;
                    if best.as_ref().is_none_or(|(b, _, _)| ax < *b) {
                        best = Some((ax, true, i));
                    }
                }
            }
            for j in t + 1..self.cols {
                if !self.a[t][j].is_zero() {
                    let ax = abs_of(&self.a[t][j])?;
                    if best.as_ref().is_none_or(|(b, _, _)| ax < *b) {
                        best = Some((ax, false, j));
                    }
                }
            }
            match best {
                Some((_, true, i)) => self.row_swap(t, i),
                Some((_, false, j)) => self.col_swap(t, j),
                None => unreachable!("dirty cross has a nonzero entry"),
            }
        }
    }
}

fn pair_mut<T>(v: &mut [Vec<T>], src: usize, dst: usize) -> (&[T], &mut [T]) {
    assert_ne!(src, dst);
    if src < dst {
        let (a, b) = v.split_at_mut(dst);
        (&a[src], &mut b[0])
    } else {
        let (a, b) = v.split_at_mut(src);
        (&b[0], &mut a[dst])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &[&[i64]]) -> Vec<i64> {
        let s = smith_normal_form(&IntMatrix::from_i64(m));
        s.diag.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    fn check_transform(m: &IntMatrix) {
        let s = smith_normal_form(m);
        let d = s.u.mul(m).mul(&s.v);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j {
                    s.diag[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(d.get(i, j), &expect);
            }
        }
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
        for w in s.diag.windows(2) {
            assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn examples() {
        assert_eq!(diag(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), vec![1, 1, 1]);
        // gcd(2,3) = 1 and lcm(2,3) = 6
        assert_eq!(diag(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(diag(&[&[2]]), vec![2]);
        assert_eq!(diag(&[&[0, 0], &[0, 0]]), vec![0, 0]);
    }

    #[test]
    fn transforms_are_unimodular() {
        check_transform(&IntMatrix::from_i64(&[
            &[2, 4, 4],
            &[-6, 6, 12],
            &[10, -4, -16],
        ]));
        check_transform(&IntMatrix::from_i64(&[&[6, 10], &[15, 4], &[0, 9]]));
    }

    #[test]
    fn left_variant_tracks_inverse() {
        let rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let ls = smith_left(rows, 3);
        let u = IntMatrix::from_nested(3, 3, ls.u);
        let ui = IntMatrix::from_nested(3, 3, ls.u_inv);
        assert_eq!(u.mul(&ui), IntMatrix::identity(3));
        let d: Vec<i64> = ls.diag.iter().map(|d| i64::try_from(d).unwrap()).collect();
        // |det| = 144 = 2 * 6 * 12, with gcd of entries 2 and gcd of 2x2 minors 12
        assert_eq!(d, vec![2, 6, 12]);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let s = smith_normal_form(&IntMatrix::from_i64(&[&[big, 0], &[0, big - 1]]));
        // coprime consecutive integers: diag is 1, big * (big - 1)
        assert_eq!(s.diag[0], BigInt::one());
        assert_eq!(s.diag[1], BigInt::from(big) * BigInt::from(big - 1));
    }
}
