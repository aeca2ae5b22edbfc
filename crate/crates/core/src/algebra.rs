//! Finite-dimensional Leibniz and Lie algebras given by structure constants.
//!
//! All algebras here are *left* Leibniz algebras: left multiplication by any
//! element is a derivation, `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{self, Mat, Scalar, SubspaceBasis};

/// Raw, unvalidated structure constants: `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Scalar>,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants { dim, table: vec![Scalar::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let d = self.dim;
        self.table[(i * d + j) * d + k] = value;
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.table[start..start + self.dim]
    }

    /// Bracket of two arbitrary elements given in coordinates.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                let coeff = xi * yj;
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &coeff * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ [b_i, y]`.
    pub fn left_mult(&self, i: usize) -> Mat {
        Mat::from_fn(self.dim, self.dim, |k, j| self.get(i, j, k).clone())
    }

    /// Matrix of `x ↦ [x, b_j]`.
    pub fn right_mult(&self, j: usize) -> Mat {
        Mat::from_fn(self.dim, self.dim, |k, i| self.get(i, j, k).clone())
    }

    fn combination(&self, coeffs: &[Scalar], mats: &[Mat]) -> Mat {
        let n = mats.first().map_or(0, Mat::rows);
        let mut out = Mat::zeros(n, n);
        for (c, m) in coeffs.iter().zip(mats) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            self.bracket_basis(i, i).iter().all(Scalar::is_zero)
                && (0..i).all(|j| {
                    self.bracket_basis(i, j).iter().zip(self.bracket_basis(j, i)).all(|(a, b)| (a + b).is_zero())
                })
        })
    }
}

/// Whether the left Leibniz identity holds on every basis triple.
///
/// Checked as `L_{[x,y]} = L_x L_y − L_y L_x` for all basis `x, y`, which is
/// the identity with `z` ranging over the basis.
pub fn check_left_leibniz(c: &StructureConstants) -> bool {
    let lefts: Vec<Mat> = (0..c.dim).map(|i| c.left_mult(i)).collect();
    (0..c.dim)
        .all(|i| (0..c.dim).all(|j| c.combination(c.bracket_basis(i, j), &lefts) == lefts[i].commutator(&lefts[j])))
}

/// A validated left Leibniz algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeibnizAlgebra {
    constants: StructureConstants,
    labels: Vec<String>,
}

impl LeibnizAlgebra {
    /// Validates the Leibniz identity. Missing labels default to `b0, b1, …`.
    pub fn new(constants: StructureConstants, labels: Option<Vec<String>>) -> Result<Self> {
        if !check_left_leibniz(&constants) {
            return Err(Error::Input("structure constants violate the left Leibniz identity".into()));
        }
        let labels = match labels {
            Some(l) if l.len() == constants.dim => l,
            Some(l) => return Err(Error::Dimension(format!("{} labels for dimension {}", l.len(), constants.dim))),
            None => (0..constants.dim).map(|i| format!("b{i}")).collect(),
        };
        Ok(LeibnizAlgebra { constants, labels })
    }

    pub fn dim(&self) -> usize {
        self.constants.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.constants.bracket_basis(i, j)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.constants.bracket(x, y)
    }

    pub fn left_mult(&self, i: usize) -> Mat {
        self.constants.left_mult(i)
    }

    pub fn is_lie(&self) -> bool {
        self.constants.is_antisymmetric()
    }

    /// Parses the JSON algebra description
    /// `{"dim": d, "bracket": [[[k, num, den], …], …], "labels": […]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        spec.build()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&AlgebraSpec::from(self)).expect("algebra spec serializes")
    }
}

impl fmt::Display for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        let mut any = false;
        for i in 0..d {
            for j in 0..d {
                let terms: Vec<String> = self
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| if c.is_one() { self.labels[k].clone() } else { format!("{c}·{}", self.labels[k]) })
                    .collect();
                if !terms.is_empty() {
                    writeln!(f, "[{}, {}] = {}", self.labels[i], self.labels[j], terms.join(" + "))?;
                    any = true;
                }
            }
        }
        if !any {
            writeln!(f, "abelian of dimension {d}")?;
        }
        Ok(())
    }
}

/// Reads the JSON algebra description without checking the Leibniz identity.
pub fn parse_structure_constants(text: &str) -> Result<(StructureConstants, Option<Vec<String>>)> {
    let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    spec.constants()
}

/// On-disk form of an algebra.
#[derive(Serialize, Deserialize)]
struct AlgebraSpec {
    dim: usize,
    bracket: Vec<Vec<Vec<(usize, i64, i64)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl AlgebraSpec {
    fn build(self) -> Result<LeibnizAlgebra> {
        let (c, labels) = self.constants()?;
        LeibnizAlgebra::new(c, labels)
    }

    fn constants(self) -> Result<(StructureConstants, Option<Vec<String>>)> {
        let d = self.dim;
        if self.bracket.len() != d || self.bracket.iter().any(|row| row.len() != d) {
            return Err(Error::Dimension(format!("bracket table must be {d}x{d}")));
        }
        let mut c = StructureConstants::zero(d);
        for (i, row) in self.bracket.iter().enumerate() {
            for (j, terms) in row.iter().enumerate() {
                for &(k, num, den) in terms {
                    if k >= d {
                        return Err(Error::Input(format!("basis index {k} out of range in [b{i}, b{j}]")));
                    }
                    if den == 0 {
                        return Err(Error::Input(format!("zero denominator in [b{i}, b{j}]")));
                    }
                    let old = c.get(i, j, k).clone();
                    c.set(i, j, k, old + Scalar::new(num, den));
                }
            }
        }
        Ok((c, self.labels))
    }
}

impl From<&LeibnizAlgebra> for AlgebraSpec {
    fn from(a: &LeibnizAlgebra) -> Self {
        let d = a.dim();
        let to_i64 = |x: &num_bigint::BigInt| i64::try_from(x).expect("structure constant fits in i64");
        let bracket = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        a.bracket_basis(i, j)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (k, to_i64(c.numer()), to_i64(c.denom())))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        AlgebraSpec { dim: d, bracket, labels: Some(a.labels.clone()) }
    }
}

/// A Leibniz algebra whose bracket is antisymmetric, hence a Lie algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra(LeibnizAlgebra);

impl LieAlgebra {
    pub fn new(constants: StructureConstants, labels: Option<Vec<String>>) -> Result<Self> {
        LieAlgebra::try_from(LeibnizAlgebra::new(constants, labels)?)
    }

    /// The abelian Lie algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra(LeibnizAlgebra::new(StructureConstants::zero(dim), None).expect("abelian algebra"))
    }

    pub fn as_leibniz(&self) -> &LeibnizAlgebra {
        &self.0
    }
}

impl TryFrom<LeibnizAlgebra> for LieAlgebra {
    type Error = Error;

    fn try_from(a: LeibnizAlgebra) -> Result<Self> {
        if a.is_lie() {
            Ok(LieAlgebra(a))
        } else {
            Err(Error::Input("bracket is not antisymmetric".into()))
        }
    }
}

impl Deref for LieAlgebra {
    type Target = LeibnizAlgebra;
    fn deref(&self) -> &LeibnizAlgebra {
        &self.0
    }
}

/// The trivial one-dimensional algebra `K = ⟨e⟩` with zero bracket.
pub fn trivial_algebra() -> LeibnizAlgebra {
    LeibnizAlgebra::new(StructureConstants::zero(1), Some(vec!["e".into()])).expect("zero bracket is Leibniz")
}

/// `Leib(h)`: the span of all squares `[x, x]`, computed from the basis
/// squares and the polarizations `[b_i, b_j] + [b_j, b_i]`.
pub fn leibniz_kernel(a: &LeibnizAlgebra) -> SubspaceBasis {
    let d = a.dim();
    let mut gens = Vec::new();
    for i in 0..d {
        gens.push(a.bracket_basis(i, i).to_vec());
        for j in i + 1..d {
            gens.push(a.bracket_basis(i, j).iter().zip(a.bracket_basis(j, i)).map(|(x, y)| x + y).collect());
        }
    }
    let kernel = SubspaceBasis::span(d, &gens);
    debug_assert!(
        (0..d).all(|i| kernel.is_stable_under(&a.left_mult(i)) && kernel.is_stable_under(&a.constants().right_mult(i)))
    );
    kernel
}

/// The canonical Lie quotient `h / Leib(h)` together with the data needed to
/// move between `h` and the quotient.
#[derive(Clone, Debug)]
pub struct LieQuotient {
    pub algebra: LieAlgebra,
    /// `dim h_Lie × dim h` matrix of the quotient map.
    pub projection: Mat,
    /// `lift[a]` is the index of the basis vector of `h` representing the
    /// `a`-th basis vector of the quotient.
    pub lift: Vec<usize>,
    pub kernel: SubspaceBasis,
}

impl LieQuotient {
    pub fn dim(&self) -> usize {
        self.lift.len()
    }

    /// Pulls an action indexed by the quotient basis back to the basis of `h`.
    pub fn pull_back(&self, action: &[Mat]) -> Vec<Mat> {
        let n = action.first().map_or(0, Mat::rows);
        (0..self.projection.cols())
            .map(|j| {
                let mut out = Mat::zeros(n, n);
                for (a, rho) in action.iter().enumerate() {
                    let c = self.projection.get(a, j);
                    if !c.is_zero() {
                        out = &out + &rho.scale(c);
                    }
                }
                out
            })
            .collect()
    }

    /// Restricts an action indexed by the basis of `h` to the lifted quotient basis.
    pub fn restrict(&self, action: &[Mat]) -> Vec<Mat> {
        self.lift.iter().map(|&i| action[i].clone()).collect()
    }
}

/// `h_Lie = h / Leib(h)` on the complement of `Leib(h)` spanned by standard
/// basis vectors at the non-pivot positions.
pub fn lie_quotient(a: &LeibnizAlgebra) -> LieQuotient {
    let d = a.dim();
    let kernel = leibniz_kernel(a);
    let k = kernel.dim();
    let (_, pivots) = linear::rref(&kernel.as_matrix().transpose());
    let lift: Vec<usize> = (0..d).filter(|j| !pivots.contains(j)).collect();

    let mut extended = kernel.vectors().to_vec();
    for &j in &lift {
        let mut e = vec![Scalar::zero(); d];
        e[j] = Scalar::one();
        extended.push(e);
    }
    let change = Mat::from_columns(d, &extended);
    let coords = linear::solve(&change, &Mat::identity(d)).expect("kernel plus complement is a basis");
    let rows: Vec<usize> = (k..d).collect();
    let projection = coords.select(&rows, &(0..d).collect::<Vec<_>>());

    let q = lift.len();
    let mut c = StructureConstants::zero(q);
    for (x, &i) in lift.iter().enumerate() {
        for (y, &j) in lift.iter().enumerate() {
            let image = projection.apply(a.bracket_basis(i, j));
            for (z, v) in image.into_iter().enumerate() {
                c.set(x, y, z, v);
            }
        }
    }
    let labels = lift.iter().map(|&i| a.labels()[i].clone()).collect();
    let algebra = LieAlgebra::new(c, Some(labels)).expect("quotient by Leib(h) is a Lie algebra");
    LieQuotient { algebra, projection, lift, kernel }
}

/// A left module: `action[i]` is the matrix of the basis element `b_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeftModule {
    dim: usize,
    action: Vec<Mat>,
}

impl LeftModule {
    /// Validates shapes and `ρ_{[x,y]} = ρ_x ρ_y − ρ_y ρ_x` on basis pairs.
    pub fn new(algebra: &LeibnizAlgebra, dim: usize, action: Vec<Mat>) -> Result<Self> {
        let m = LeftModule::from_actions(algebra.dim(), dim, action)?;
        m.check(algebra)?;
        Ok(m)
    }

    /// Shape checks only.
    pub fn from_actions(algebra_dim: usize, dim: usize, action: Vec<Mat>) -> Result<Self> {
        if action.len() != algebra_dim {
            return Err(Error::Dimension(format!(
                "{} action matrices for an algebra of dimension {algebra_dim}",
                action.len()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Dimension(format!("action matrix is {}x{}, expected {dim}x{dim}", m.rows(), m.cols())));
        }
        Ok(LeftModule { dim, action })
    }

    /// The `dim`-dimensional module on which everything acts by zero.
    pub fn trivial(algebra_dim: usize, dim: usize) -> Self {
        LeftModule { dim, action: vec![Mat::zeros(dim, dim); algebra_dim] }
    }

    pub fn check(&self, algebra: &LeibnizAlgebra) -> Result<()> {
        if self.action.len() != algebra.dim() {
            return Err(Error::Dimension(format!(
                "module has {} action matrices, algebra has dimension {}",
                self.action.len(),
                algebra.dim()
            )));
        }
        let d = algebra.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = algebra.constants().combination(algebra.bracket_basis(i, j), &self.action);
                let lhs = if lhs.rows() == 0 { Mat::zeros(self.dim, self.dim) } else { lhs };
                if lhs != self.action[i].commutator(&self.action[j]) {
                    return Err(Error::ModuleAxiom(format!(
                        "ρ([{0}, {1}]) ≠ [ρ({0}), ρ({1})]",
                        algebra.labels()[i],
                        algebra.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &LeftModule) -> LeftModule {
        assert_eq!(self.action.len(), other.action.len(), "direct sum over different algebras");
        let n = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Mat::zeros(n, n);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        LeftModule { dim: n, action }
    }

    /// Vectors killed by every basis element.
    pub fn invariants(&self) -> SubspaceBasis {
        if self.action.is_empty() {
            return SubspaceBasis::full(self.dim);
        }
        linear::kernel_basis(&Mat::vstack(self.dim, &self.action))
    }

    /// Same action expressed in the basis given by the columns of `change`
    /// (an invertible matrix): `ρ'_x = change⁻¹ ρ_x change`.
    pub fn conjugate(&self, change: &Mat) -> Result<LeftModule> {
        let inv = linear::solve(change, &Mat::identity(self.dim))
            .ok_or_else(|| Error::Input("change of basis is not invertible".into()))?;
        let action = self.action.iter().map(|a| &(&inv * a) * change).collect();
        Ok(LeftModule { dim: self.dim, action })
    }
}

/// `h` as a module over `h_Lie` through left multiplication.
pub fn adjoint_module(a: &LeibnizAlgebra, quotient: &LieQuotient) -> LeftModule {
    let action = quotient.lift.iter().map(|&i| a.left_mult(i)).collect();
    LeftModule { dim: a.dim(), action }
}

/// The hemi-semidirect product `M ×_hs g` on `M ⊕ g` (module basis first)
/// with `[(a, x), (b, y)] = (x·b, [x, y])`.
pub fn hemi_semidirect(g: &LieAlgebra, m: &LeftModule) -> Result<LeibnizAlgebra> {
    m.check(g)?;
    let dm = m.dim();
    let dg = g.dim();
    let d = dm + dg;
    let mut c = StructureConstants::zero(d);
    for x in 0..dg {
        let rho = m.action(x);
        for b in 0..dm {
            for k in 0..dm {
                c.set(dm + x, b, k, rho.get(k, b).clone());
            }
        }
        for y in 0..dg {
            for (k, v) in g.bracket_basis(x, y).iter().enumerate() {
                c.set(dm + x, dm + y, dm + k, v.clone());
            }
        }
    }
    let labels = (0..dm).map(|i| format!("v{i}")).chain(g.labels().iter().cloned()).collect();
    let h = LeibnizAlgebra::new(c, Some(labels))?;
    debug_assert!(leibniz_kernel(&h).dim() <= dm);
    Ok(h)
}
