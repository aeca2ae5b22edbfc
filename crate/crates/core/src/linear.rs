//! Exact linear algebra over the rationals.
//!
//! Everything downstream (ranks of differentials, invariant subspaces,
//! subquotient actions) reduces to the handful of routines here. Matrices are
//! dense and row-major; elimination skips zero entries, which is what keeps
//! the large but sparse cochain differentials tractable.
//!
//! Tensor products use one fixed convention throughout the crate: the basis
//! vector `e_i ⊗ f_j` of `U ⊗ V` has index `i * dim V + j`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        Scalar(self.0.recip())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The value as an `i64`, if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            i64::try_from(self.0.numer()).ok()
        } else {
            None
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_integer(n as i64)
    }
}

impl From<usize> for Scalar {
    fn from(n: usize) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `n` or `n/d` with optional sign on the numerator.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("not a rational literal: {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Input(format!("zero denominator in {s:?}")));
        }
        Ok(Scalar(BigRational::new(num, den)))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_i64() {
            Some(n) => serializer.serialize_i64(n),
            None => serializer.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Literal {
            Int(i64),
            Text(String),
        }
        match Literal::deserialize(deserializer)? {
            Literal::Int(n) => Ok(Scalar::from_integer(n)),
            Literal::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

/// A dense `rows × cols` matrix of scalars. Zero-row and zero-column
/// matrices are legal and stand for maps to or from the zero space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Mat::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows<T: Into<Scalar> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Mat { rows: rows.len(), cols, data })
    }

    /// Square or rectangular integer matrix from a literal; rows must be non-ragged.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Mat::from_rows(cols, &rows).expect("ragged integer matrix literal")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut m = Mat::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column {j} has wrong length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, value: &Scalar) {
        self.data[i * self.cols + j] += value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// `self · other − other · self`.
    pub fn commutator(&self, other: &Mat) -> Mat {
        &(self * other) - &(other * self)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(cols: usize, blocks: &[Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Mat { rows, cols, data }
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(rows: usize, blocks: &[Mat]) -> Mat {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..b.cols {
                    m.data[i * cols + offset + j] = b.get(i, j).clone();
                }
            }
            offset += b.cols;
        }
        m
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    fn to_row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.get(i, j)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
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
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

/// Row echelon form together with the pivot column of each nonzero row.
struct Echelon {
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

/// Gaussian elimination with the first nonzero entry in each column as pivot.
/// With `reduced`, entries above pivots are cleared too and pivots are 1.
fn eliminate(mut rows: Vec<Vec<Scalar>>, ncols: usize, reduced: bool) -> Echelon {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let mut pivot_row = std::mem::take(&mut rows[r]);
        if reduced && !pivot_row[c].is_one() {
            let inv = pivot_row[c].recip();
            for x in pivot_row[c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let support: Vec<usize> = (c..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        let lead = pivot_row[c].clone();
        let start = if reduced { 0 } else { r + 1 };
        for (i, row) in rows.iter_mut().enumerate().skip(start) {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = if lead.is_one() { row[c].clone() } else { &row[c] / &lead };
            for &j in &support {
                let t = &factor * &pivot_row[j];
                row[j] -= t;
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

/// Dimension of the column space.
pub fn rank(m: &Mat) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // Elimination cost scales with the number of pivots times the longer side;
    // eliminate along whichever orientation has fewer columns.
    if m.rows < m.cols {
        eliminate(m.transpose().to_row_vecs(), m.rows, false).pivots.len()
    } else {
        eliminate(m.to_row_vecs(), m.cols, false).pivots.len()
    }
}

/// `rows − rank`.
pub fn cokernel_dim(m: &Mat) -> usize {
    m.rows - rank(m)
}

/// Reduced row echelon form and its pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let e = eliminate(m.to_row_vecs(), m.cols, true);
    let mut out = Mat::zeros(m.rows, m.cols);
    for (i, row) in e.rows.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            out.data[i * m.cols + j] = x;
        }
    }
    (out, e.pivots)
}

/// Basis of the null space, one vector per free column of the reduced form.
pub fn kernel_basis(m: &Mat) -> SubspaceBasis {
    let e = eliminate(m.to_row_vecs(), m.cols, true);
    let mut is_pivot = vec![false; m.cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); m.cols];
            v[f] = Scalar::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            v
        })
        .collect();
    SubspaceBasis { ambient_dim: m.cols, vectors }
}

/// Basis of the column space, taken from the pivot columns of `m` itself.
pub fn image_basis(m: &Mat) -> SubspaceBasis {
    SubspaceBasis::span(m.rows, &m.columns())
}

/// Solves `a · x = b` for `x`, where `a` has linearly independent columns.
/// Returns `None` when some column of `b` lies outside the column space of `a`.
pub fn solve(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.rows, b.rows, "solve: row mismatch");
    let k = a.cols;
    let aug = Mat::hstack(a.rows, &[a.clone(), b.clone()]);
    let e = eliminate(aug.to_row_vecs(), aug.cols, true);
    if e.pivots.iter().any(|&p| p >= k) {
        return None;
    }
    assert_eq!(e.pivots.len(), k, "solve: coefficient matrix has dependent columns");
    Some(Mat::from_fn(k, b.cols, |i, j| e.rows[i][k + j].clone()))
}

/// Kronecker product; row `(i, i')` of the result has index `i * b.rows() + i'`.
pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = Mat::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.data[(i * b.rows + k) * cols + j * b.cols + l] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// A linearly independent list of vectors in a fixed ambient space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Scalar>>,
}

impl SubspaceBasis {
    /// Checks lengths and linear independence.
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient space of dimension {ambient_dim}",
                v.len()
            )));
        }
        let basis = SubspaceBasis { ambient_dim, vectors };
        if rank(&basis.as_matrix()) != basis.dim() {
            return Err(Error::Input("vectors are linearly dependent".into()));
        }
        Ok(basis)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, vectors: Vec::new() }
    }

    /// The standard basis.
    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, vectors: Mat::identity(ambient_dim).columns() }
    }

    /// An independent subset of `vectors` spanning the same space: the
    /// vectors at the pivot columns when they are laid out as columns.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        let m = Mat::from_columns(ambient_dim, vectors);
        let pivots = eliminate(m.to_row_vecs(), m.cols, false).pivots;
        SubspaceBasis { ambient_dim, vectors: pivots.into_iter().map(|p| vectors[p].clone()).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    /// `ambient_dim × dim` matrix with the basis vectors as columns.
    pub fn as_matrix(&self) -> Mat {
        Mat::from_columns(self.ambient_dim, &self.vectors)
    }

    /// Coordinates of each column of `m` in this basis, if all lie in the span.
    pub fn coordinates_of(&self, m: &Mat) -> Option<Mat> {
        solve(&self.as_matrix(), m)
    }

    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.coordinates_of(&Mat::from_columns(self.ambient_dim, &[v.to_vec()])).map(|c| c.column(0))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        other.is_zero() || self.coordinates_of(&other.as_matrix()).is_some()
    }

    /// Whether `f` maps the span into itself.
    pub fn is_stable_under(&self, f: &Mat) -> bool {
        self.is_zero() || self.coordinates_of(&(f * &self.as_matrix())).is_some()
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let all: Vec<Vec<Scalar>> = self.vectors.iter().chain(&other.vectors).cloned().collect();
        SubspaceBasis::span(self.ambient_dim, &all)
    }
}

/// Induced map on `span(sub) / span(quot_of)`.
///
/// The quotient basis is the image of the vectors of `sub` left over after
/// extending `quot_of` (in `sub` coordinates) by standard vectors at the
/// non-pivot positions of its echelon form. Fails if `f` does not preserve
/// either subspace or if `quot_of` is not contained in `sub`.
pub fn restrict_and_project(f: &Mat, sub: &SubspaceBasis, quot_of: &SubspaceBasis) -> Result<Mat> {
    let n = sub.ambient_dim;
    if !f.is_square() || f.rows() != n || quot_of.ambient_dim != n {
        return Err(Error::Dimension(format!(
            "map is {}x{}, subspaces live in dimension {n} and {}",
            f.rows(),
            f.cols(),
            quot_of.ambient_dim
        )));
    }
    let s = sub.dim();
    let q = quot_of.dim();
    let basis = sub.as_matrix();
    let image = sub
        .coordinates_of(&(f * &basis))
        .ok_or_else(|| Error::Stability("map does not preserve the subspace".into()))?;
    let quot_coords = sub
        .coordinates_of(&quot_of.as_matrix())
        .ok_or_else(|| Error::Stability("quotient subspace is not contained in the subspace".into()))?;
    if !quot_of.is_stable_under(f) {
        return Err(Error::Stability("map does not preserve the quotient subspace".into()));
    }

    let pivots = eliminate(quot_coords.transpose().to_row_vecs(), s, false).pivots;
    let complement: Vec<usize> = (0..s).filter(|j| !pivots.contains(j)).collect();
    let mut extended = quot_coords.columns();
    for &j in &complement {
        let mut e = vec![Scalar::zero(); s];
        e[j] = Scalar::one();
        extended.push(e);
    }
    let change = Mat::from_columns(s, &extended);
    let targets = image.select(&(0..s).collect::<Vec<_>>(), &complement);
    let coords = solve(&change, &targets).expect("extended basis spans the subspace");
    let rows: Vec<usize> = (q..s).collect();
    let cols: Vec<usize> = (0..complement.len()).collect();
    Ok(coords.select(&rows, &cols))
}
