//! Exact matrices over a division ring.
//!
//! Columns form a right vector space and rows a left one: elimination
//! left-multiplies rows and right-multiplies columns, and never assumes the
//! entries commute.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{CPair, ParseScalar, Quat, RealScalar, Scalar, Sign};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    /// Build from rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        Matrix::try_from_rows(rows).expect("rectangular rows")
    }

    pub fn try_from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// The matrix whose columns are `cols`.
    pub fn from_columns(cols: &[Vec<S>]) -> Result<Self> {
        Ok(Matrix::try_from_rows(cols.to_vec())?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Transpose followed by entrywise conjugation.
    pub fn conj_transpose(&self) -> Self {
        let mut t = self.transpose();
        for x in &mut t.data {
            *x = x.conj();
        }
        t
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = S::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(r, k).clone() * rhs.get(k, c).clone();
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// `M · v` for a column `v`.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    /// Determinant over a commutative field, by Gaussian elimination.
    pub fn det(&self) -> Result<S> {
        if !S::COMMUTATIVE {
            return Err(Error::Noncommutative);
        }
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = S::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return Ok(S::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let pivot = a.get(c, c).clone();
            let pinv = pivot.inv().ok_or(Error::DivisionByZero)?;
            det = det * pivot;
            for r in c + 1..n {
                let f = a.get(r, c).clone() * pinv.clone();
                if f.is_zero() {
                    continue;
                }
                for k in c..n {
                    let v = a.get(r, k).clone() - f.clone() * a.get(c, k).clone();
                    a.set(r, k, v);
                }
            }
        }
        Ok(det)
    }

    /// `|det M|²` or the Study determinant, whichever the domain supports.
    pub fn det_norm(&self) -> Result<S::Real> {
        S::det_norm(self)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Row-reduced echelon form under left row operations, with pivot
    /// columns.
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let pinv = a.get(r, c).inv().expect("nonzero pivot");
            for k in 0..self.cols {
                let v = pinv.clone() * a.get(r, k).clone();
                a.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for k in 0..self.cols {
                    let v = a.get(i, k).clone() - f.clone() * a.get(r, k).clone();
                    a.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// A basis of the right null space `{v : M·v = 0}`.
    pub fn null_space(&self) -> Vec<Vec<S>> {
        let (a, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a.get(r, f).clone();
                }
                v
            })
            .collect()
    }
}

impl<F: RealScalar> Matrix<Quat<F>> {
    /// Replace each quaternion entry by its 2×2 complex block.
    pub fn complexify(&self) -> Matrix<CPair<F>> {
        let n = self.rows;
        let m = self.cols;
        let mut out = Matrix::zeros(2 * n, 2 * m);
        for r in 0..n {
            for c in 0..m {
                let b = crate::scalars::complexify(self.get(r, c));
                for i in 0..2 {
                    for j in 0..2 {
                        out.set(2 * r + i, 2 * c + j, b.get(i, j).clone());
                    }
                }
            }
        }
        out
    }

    /// `Π |pivot|²` of left elimination; equals the Study determinant and
    /// avoids the 2n×2n complex matrix.
    pub fn pivot_norm(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut acc = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return Ok(F::zero());
            };
            a.swap_rows(p, c);
            let pivot = a.get(c, c).clone();
            let pinv = pivot.inv().ok_or(Error::DivisionByZero)?;
            acc = acc * pivot.abs_sq();
            for r in c + 1..n {
                let f = a.get(r, c).clone() * pinv.clone();
                if f.is_zero() {
                    continue;
                }
                for k in c + 1..n {
                    let v = a.get(r, k).clone() - f.clone() * a.get(c, k).clone();
                    a.set(r, k, v);
                }
            }
        }
        Ok(acc)
    }

    /// The Study determinant `det(M_ℂ)`, a non-negative real.
    pub fn sdet(&self) -> Result<F> {
        let d = self.complexify().det()?;
        if !d.im.is_zero() || d.re.sign() == Sign::Neg {
            return Err(Error::Internal(format!("Study determinant {d} is not a non-negative real")));
        }
        Ok(d.re)
    }
}

/// `Σ aₖ bₖ` with each product taken in the given order.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `v · s` for a column `v`.
pub fn scale_right<S: Scalar>(v: &[S], s: &S) -> Vec<S> {
    v.iter().map(|x| x.clone() * s.clone()).collect()
}

/// `s · w` for a row `w`.
pub fn scale_left<S: Scalar>(s: &S, w: &[S]) -> Vec<S> {
    w.iter().map(|x| s.clone() * x.clone()).collect()
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Which side scalars act on in a span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Column vectors, `v·λ`.
    Right,
    /// Row vectors, `λ·w`.
    Left,
}

/// An incrementally built echelon basis of a one-sided span.
///
/// Basis vectors are kept with a unit entry at their pivot and zeros at the
/// pivots of every earlier vector, so reduction in insertion order is exact.
#[derive(Clone, Debug)]
pub struct SpanBasis<S> {
    side: Side,
    len: usize,
    basis: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> SpanBasis<S> {
    pub fn new(side: Side, len: usize) -> Self {
        SpanBasis {
            side,
            len,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.len, "vector length");
        let mut w = v.to_vec();
        for (p, b) in &self.basis {
            let f = w[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (k, bk) in b.iter().enumerate() {
                let t = match self.side {
                    Side::Right => bk.clone() * f.clone(),
                    Side::Left => f.clone() * bk.clone(),
                };
                w[k] = w[k].clone() - t;
            }
        }
        w
    }

    pub fn contains(&self, v: &[S]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Add `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[S]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        let w = match self.side {
            Side::Right => scale_right(&w, &inv),
            Side::Left => scale_left(&inv, &w),
        };
        self.basis.push((p, w));
        true
    }
}

fn rank_of<S: Scalar>(side: Side, vectors: &[Vec<S>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut span = SpanBasis::new(side, first.len());
    for v in vectors {
        span.insert(v);
    }
    span.rank()
}

/// Dimension of the right span of column vectors.
pub fn right_rank<S: Scalar>(vectors: &[Vec<S>]) -> usize {
    rank_of(Side::Right, vectors)
}

/// Dimension of the left span of row vectors.
pub fn left_rank<S: Scalar>(vectors: &[Vec<S>]) -> usize {
    rank_of(Side::Left, vectors)
}

/// The common point of `n` hyperplanes in `Pⁿ`, when it is unique.
///
/// The result is normalized so the coordinates sum to 1, or, for a point on
/// `Σ xₚ = 0`, so its first nonzero coordinate is 1.  `None` when the
/// solution space is not one-dimensional.
pub fn intersect_hyperplanes<S: Scalar>(rows: &[Vec<S>]) -> Option<Vec<S>> {
    let m = Matrix::try_from_rows(rows.to_vec()).ok()?;
    let mut ns = m.null_space();
    if ns.len() != 1 {
        return None;
    }
    let v = ns.pop()?;
    debug_assert!(rows.iter().all(|r| dot(r, &v).is_zero()));
    Some(normalize_point(&v))
}

/// Right-rescale a nonzero column to barycentric sum 1, or first nonzero
/// coordinate 1 when the sum vanishes.
pub fn normalize_point<S: Scalar>(v: &[S]) -> Vec<S> {
    let sum = v.iter().fold(S::zero(), |acc, x| acc + x.clone());
    let s = if sum.is_zero() {
        v.iter().find(|x| !x.is_zero()).expect("nonzero vector").clone()
    } else {
        sum
    };
    scale_right(v, &s.inv().expect("nonzero"))
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    /// Rows separated by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Split at `sep` outside parentheses.
pub(crate) fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl<S: Scalar + ParseScalar> Matrix<S> {
    /// Parse the text form written by `Display`.
    pub fn parse(s: &str, d: Option<i64>) -> Result<Self> {
        let rows = split_top(s, ';')
            .into_iter()
            .map(|row| {
                split_top(row, ',')
                    .into_iter()
                    .map(|x| S::parse_literal(x, d))
                    .collect::<Result<Vec<S>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::try_from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Quad, Rat};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn rm(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(rows.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect())
    }

    fn random_quat_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Quat<Rat>> {
        Matrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| Quat::sample_small(rng, 0)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinants() {
        assert_eq!(Matrix::<Rat>::identity(3).det().unwrap(), r(1));
        assert_eq!(rm(&[&[1, 2, 1], &[3, 4, 3], &[5, 6, 5]]).det().unwrap(), r(0));
        assert_eq!(rm(&[&[2, 1], &[7, 4]]).det().unwrap(), r(1));
        // cofactor oracle
        let m = rm(&[&[2, -1, 3], &[0, 4, 1], &[5, 2, -2]]);
        let cof = 2 * (4 * -2 - 2) - (-1) * (0 * -2 - 5) + 3 * (0 * 2 - 4 * 5);
        assert_eq!(m.det().unwrap(), r(cof));
        let q = Matrix::<Quat<Rat>>::identity(2);
        assert!(matches!(q.det(), Err(Error::Noncommutative)));
    }

    #[test]
    fn study_determinant_examples() {
        let a = Quat::new(r(1), r(1), r(1), r(1));
        assert_eq!(Matrix::from_rows(vec![vec![a]]).sdet().unwrap(), r(4));
        assert_eq!(Matrix::<Quat<Rat>>::identity(4).sdet().unwrap(), r(1));
    }

    #[test]
    fn study_determinant_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = random_quat_matrix(&mut rng, 3);
            let b = random_quat_matrix(&mut rng, 3);
            let (sa, sb) = (a.sdet().unwrap(), b.sdet().unwrap());
            assert!(sa.is_nonneg());
            assert_eq!(a.mul(&b).unwrap().sdet().unwrap(), sa * sb);
        }
    }

    #[test]
    fn pivot_norm_matches_the_complex_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=4 {
            for _ in 0..25 {
                let m = random_quat_matrix(&mut rng, n);
                assert_eq!(m.pivot_norm().unwrap(), m.sdet().unwrap());
            }
        }
        // a zero leading entry forces a row swap
        let z = Quat::<Rat>::zero();
        let o = Quat::<Rat>::one();
        let m = Matrix::from_rows(vec![vec![z.clone(), o.clone()], vec![o, z]]);
        assert_eq!(m.pivot_norm().unwrap(), m.sdet().unwrap());
    }

    #[test]
    fn study_determinant_detects_singularity() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let mut m = random_quat_matrix(&mut rng, 3);
            // third row = λ·(first row) sometimes
            if rand::Rng::gen_bool(&mut rng, 0.5) {
                let lam = Quat::sample_small(&mut rng, 0);
                let row = scale_left(&lam, m.row(0));
                for (c, x) in row.into_iter().enumerate() {
                    m.set(2, c, x);
                }
            }
            let invertible = left_rank(&m.to_rows()) == 3;
            assert_eq!(m.sdet().unwrap().is_zero(), !invertible);
            let columns: Vec<Vec<_>> = (0..3).map(|c| m.column(c)).collect();
            assert_eq!(right_rank(&columns) == 3, invertible);
        }
    }

    #[test]
    fn ranks() {
        let e = |i: usize| {
            let mut v = vec![Quat::<Rat>::zero(); 5];
            v[i] = Quat::one();
            v
        };
        assert_eq!(right_rank(&[e(0), e(1), e(2)]), 3);
        let v = vec![Quat::new(r(1), r(2), r(0), r(-1)), Quat::j(), Quat::zero()];
        let q = Quat::new(r(0), r(3), r(-1), r(2));
        assert_eq!(right_rank(&[v.clone(), scale_right(&v, &q)]), 1);
        // v·q is not a left multiple of v in general
        assert_eq!(left_rank(&[v.clone(), scale_right(&v, &q)]), 2);
        // [1, i]·j = [j, ij] = [j, k]: right-dependent, yet no left
        // multiple of [1, i] gives [j, k] since j·i = −k
        let a = vec![Quat::<Rat>::one(), Quat::i()];
        let b = vec![Quat::j(), Quat::k()];
        assert_eq!(scale_right(&a, &Quat::j()), b);
        assert_eq!(right_rank(&[a.clone(), b.clone()]), 1);
        assert_eq!(left_rank(&[a.clone(), b]), 2);
        let c = vec![Quat::j(), -Quat::k()];
        assert_eq!(right_rank(&[a, c]), 2);
    }

    #[test]
    fn intersections() {
        let h = |i: usize| {
            let mut v = vec![Rat::zero(); 5];
            v[i] = Rat::one();
            v
        };
        let p = intersect_hyperplanes(&[h(1), h(2), h(3), h(4)]).unwrap();
        assert_eq!(p, h(0));
        // α₁₂x₁ + x₂ = 0 with α₁₂ = 1/2; closed form (1 − α)⁻¹ = 2
        let mut row = vec![Rat::zero(); 5];
        row[0] = Rat::new(1, 2);
        row[1] = Rat::one();
        let p = intersect_hyperplanes(&[row.clone(), h(2), h(3), h(4)]).unwrap();
        assert_eq!(p, vec![r(2), r(-1), r(0), r(0), r(0)]);
        assert!(dot(&row, &p).is_zero());
        assert!(intersect_hyperplanes(&[h(1), h(1), h(3), h(4)]).is_none());
        // a point at infinity keeps its first coordinate 1
        let p = intersect_hyperplanes(&[vec![r(1), r(1), r(0)], vec![r(0), r(0), r(1)]]).unwrap();
        assert_eq!(p, vec![r(1), r(-1), r(0)]);
    }

    #[test]
    fn quaternion_intersections_are_incident() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let rows: Vec<Vec<Quat<Rat>>> = (0..3)
                .map(|_| (0..4).map(|_| Quat::sample_small(&mut rng, 0)).collect())
                .collect();
            let p = intersect_hyperplanes(&rows).expect("generic rows");
            for row in &rows {
                assert!(dot(row, &p).is_zero());
            }
        }
    }

    #[test]
    fn text_form_round_trips() {
        let m = Matrix::from_rows(vec![
            vec![Quat::new(r(1), Rat::new(1, 2), r(0), r(-3)), Quat::one()],
            vec![Quat::zero(), Quat::k()],
        ]);
        let s = m.to_string();
        assert_eq!(Matrix::<Quat<Rat>>::parse(&s, None).unwrap(), m);
        let q: Matrix<Quad> = Matrix::parse("1, 1/2+1/2*rt(5); 0, -1", Some(5)).unwrap();
        assert_eq!(q.get(0, 1), &Quad::phi());
        assert!(Matrix::<Rat>::parse("1, 2; 3", None).is_err());
    }

    proptest! {
        #[test]
        fn sdet_of_real_matrix_is_det_squared(entries in proptest::collection::vec((-9i64..=9, 1i64..=5), 9)) {
            let rows: Vec<Vec<Rat>> = entries.chunks(3)
                .map(|c| c.iter().map(|&(n, d)| Rat::new(n, d)).collect())
                .collect();
            let m = Matrix::from_rows(rows);
            let q = m.map(|x| Quat::real(x.clone()));
            prop_assert_eq!(q.sdet().unwrap(), m.det().unwrap().square());
        }
    }
}
