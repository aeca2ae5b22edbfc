//! Leibniz bimodules and their canonical subquotients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{lie_quotient, trivial_algebra, LeftModule, LeibnizAlgebra, LieAlgebra, LieQuotient};
use crate::error::{Error, Result};
use crate::linear::{self, Mat, Scalar, SubspaceBasis};

/// A bimodule over a Leibniz algebra: `left[i]` is `m ↦ b_i·m`, `right[i]`
/// is `m ↦ m·b_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bimodule {
    algebra: LeibnizAlgebra,
    dim: usize,
    left: Vec<Mat>,
    right: Vec<Mat>,
}

impl Bimodule {
    /// Builds a bimodule and validates the three axiom families.
    pub fn new(algebra: &LeibnizAlgebra, dim: usize, left: Vec<Mat>, right: Vec<Mat>) -> Result<Self> {
        let b = Bimodule::from_actions(algebra, dim, left, right)?;
        b.check()?;
        Ok(b)
    }

    /// Shape checks only; see [`Bimodule::check`].
    pub fn from_actions(algebra: &LeibnizAlgebra, dim: usize, left: Vec<Mat>, right: Vec<Mat>) -> Result<Self> {
        let n = algebra.dim();
        if left.len() != n || right.len() != n {
            return Err(Error::Dimension(format!(
                "{} left and {} right matrices for an algebra of dimension {n}",
                left.len(),
                right.len()
            )));
        }
        if let Some(m) = left.iter().chain(&right).find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Dimension(format!("action matrix is {}x{}, expected {dim}x{dim}", m.rows(), m.cols())));
        }
        Ok(Bimodule { algebra: algebra.clone(), dim, left, right })
    }

    /// The `dim`-dimensional bimodule with both actions zero.
    pub fn trivial(algebra: &LeibnizAlgebra, dim: usize) -> Self {
        let zero = vec![Mat::zeros(dim, dim); algebra.dim()];
        Bimodule { algebra: algebra.clone(), dim, left: zero.clone(), right: zero }
    }

    /// Checks (LLM), (LML) and (MLL) on all basis pairs, naming the first failure.
    pub fn check(&self) -> Result<()> {
        let n = self.algebra.dim();
        let combo = |coeffs: &[Scalar], mats: &[Mat]| {
            let mut out = Mat::zeros(self.dim, self.dim);
            for (c, m) in coeffs.iter().zip(mats) {
                if !c.is_zero() {
                    out = &out + &m.scale(c);
                }
            }
            out
        };
        let name = |i: usize| &self.algebra.labels()[i];
        for x in 0..n {
            for y in 0..n {
                let xy = self.algebra.bracket_basis(x, y);
                let l_xy = combo(xy, &self.left);
                let r_xy = combo(xy, &self.right);
                if l_xy != self.left[x].commutator(&self.left[y]) {
                    return Err(Error::ModuleAxiom(format!("(LLM) fails for ({}, {})", name(x), name(y))));
                }
                let rl = &self.right[y] * &self.left[x];
                if rl != &(&self.left[x] * &self.right[y]) - &r_xy {
                    return Err(Error::ModuleAxiom(format!("(LML) fails for ({}, {})", name(x), name(y))));
                }
                if &self.right[y] * &self.right[x] != &r_xy - &(&self.left[x] * &self.right[y]) {
                    return Err(Error::ModuleAxiom(format!("(MLL) fails for ({}, {})", name(x), name(y))));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self, i: usize) -> &Mat {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &Mat {
        &self.right[i]
    }

    pub fn lefts(&self) -> &[Mat] {
        &self.left
    }

    pub fn rights(&self) -> &[Mat] {
        &self.right
    }

    pub fn is_symmetric(&self) -> bool {
        self.left.iter().zip(&self.right).all(|(l, r)| (l + r).is_zero())
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.right.iter().all(Mat::is_zero)
    }

    /// The left action restricted to the lifted basis of `h_Lie`. Leib(h)
    /// acts by zero on the left of every bimodule, so this is an
    /// `h_Lie`-module.
    pub fn lie_module(&self, quotient: &LieQuotient) -> LeftModule {
        LeftModule::from_actions(quotient.dim(), self.dim, quotient.restrict(&self.left)).expect("shapes agree")
    }

    /// Parses `{"dim": d, "left": [...], "right": [...]}` with one matrix
    /// (a list of rows of rationals) per basis element of `algebra`.
    pub fn from_json(algebra: &LeibnizAlgebra, text: &str) -> Result<Self> {
        let spec: BimoduleSpec = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let mats = |raw: Vec<Vec<Vec<Scalar>>>| -> Result<Vec<Mat>> {
            raw.into_iter().map(|rows| Mat::from_rows(spec.dim, &rows)).collect()
        };
        let left = mats(spec.left)?;
        let right = mats(spec.right)?;
        Bimodule::new(algebra, spec.dim, left, right)
    }

    pub fn to_json(&self) -> String {
        let rows = |m: &Mat| (0..m.rows()).map(|i| m.row(i).to_vec()).collect::<Vec<_>>();
        let spec = BimoduleSpec {
            dim: self.dim,
            left: self.left.iter().map(rows).collect(),
            right: self.right.iter().map(rows).collect(),
        };
        serde_json::to_string(&spec).expect("bimodule spec serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct BimoduleSpec {
    dim: usize,
    left: Vec<Vec<Vec<Scalar>>>,
    right: Vec<Vec<Vec<Scalar>>>,
}

/// Whether all three bimodule axiom families hold.
pub fn check_bimodule(b: &Bimodule) -> bool {
    b.check().is_ok()
}

/// Left action of `h` on `m`, given either directly over `h` or over
/// `h_Lie` (then pulled back along the quotient map).
fn lift_to(h: &LeibnizAlgebra, m: &LeftModule) -> Result<Vec<Mat>> {
    if m.algebra_dim() == h.dim() {
        // ρ_{[x,x]} = [ρ_x, ρ_x] = 0, so Leib(h) already acts by zero.
        m.check(h)?;
        return Ok(m.actions().to_vec());
    }
    let q = lie_quotient(h);
    if m.algebra_dim() == q.dim() {
        m.check(&q.algebra)?;
        return Ok(q.pull_back(m.actions()));
    }
    Err(Error::Dimension(format!(
        "module has {} action matrices; algebra has dimension {} and Lie quotient dimension {}",
        m.algebra_dim(),
        h.dim(),
        q.dim()
    )))
}

/// `M^s`: right action `m·x = −x·m`.
pub fn symmetric(h: &LeibnizAlgebra, m: &LeftModule) -> Result<Bimodule> {
    let left = lift_to(h, m)?;
    let right = left.iter().map(|l| -l).collect();
    let b = Bimodule::from_actions(h, m.dim(), left, right)?;
    debug_assert!(check_bimodule(&b));
    Ok(b)
}

/// `M^a`: right action zero.
pub fn antisymmetric(h: &LeibnizAlgebra, m: &LeftModule) -> Result<Bimodule> {
    let left = lift_to(h, m)?;
    let right = vec![Mat::zeros(m.dim(), m.dim()); h.dim()];
    let b = Bimodule::from_actions(h, m.dim(), left, right)?;
    debug_assert!(check_bimodule(&b));
    Ok(b)
}

/// `M_0`: the span of all `x·m + m·x`.
pub fn antisymmetric_kernel(b: &Bimodule) -> SubspaceBasis {
    let gens: Vec<Vec<Scalar>> = b.left.iter().zip(&b.right).flat_map(|(l, r)| (l + r).columns()).collect();
    let m0 = SubspaceBasis::span(b.dim, &gens);
    debug_assert!(b.left.iter().chain(&b.right).all(|a| m0.is_stable_under(a)));
    m0
}

/// `M^sym = M / M_0` with the induced actions.
pub fn sym_quotient(b: &Bimodule) -> Result<Bimodule> {
    let m0 = antisymmetric_kernel(b);
    let full = SubspaceBasis::full(b.dim);
    let induce = |mats: &[Mat]| -> Result<Vec<Mat>> {
        mats.iter().map(|a| linear::restrict_and_project(a, &full, &m0)).collect()
    };
    let left = induce(&b.left)?;
    let right = induce(&b.right)?;
    let q = Bimodule::from_actions(&b.algebra, b.dim - m0.dim(), left, right)?;
    assert!(q.is_symmetric(), "M/M_0 is not symmetric");
    Ok(q)
}

/// `M^h = HL^0(h, M)`: vectors killed by every right action.
pub fn right_invariants(b: &Bimodule) -> SubspaceBasis {
    if b.right.is_empty() {
        return SubspaceBasis::full(b.dim);
    }
    linear::kernel_basis(&Mat::vstack(b.dim, &b.right))
}

/// `M^0 = ker(L_e + R_e)` for a bimodule over a one-dimensional algebra.
pub fn m_zero_subspace(b: &Bimodule) -> Result<SubspaceBasis> {
    if b.algebra.dim() != 1 {
        return Err(Error::Dimension(format!("algebra has dimension {}, expected 1", b.algebra.dim())));
    }
    Ok(linear::kernel_basis(&(&b.left[0] + &b.right[0])))
}

/// `Hom(U, V)` with `(x·f) = ρ^v_x ∘ f − f ∘ ρ^u_x`, on the row-major
/// flattening of `dim v × dim u` matrices.
pub fn hom_module_action(g: &LieAlgebra, u: &LeftModule, v: &LeftModule) -> LeftModule {
    assert_eq!(u.algebra_dim(), g.dim(), "u is not a module over g");
    assert_eq!(v.algebra_dim(), g.dim(), "v is not a module over g");
    let iu = Mat::identity(u.dim());
    let iv = Mat::identity(v.dim());
    let action =
        (0..g.dim()).map(|x| &linear::kron(v.action(x), &iu) - &linear::kron(&iv, &u.action(x).transpose())).collect();
    LeftModule::from_actions(g.dim(), u.dim() * v.dim(), action).expect("shapes agree")
}

/// `dim Hom_g(U, V)` by solving `ρ^v_x f = f ρ^u_x` for all basis `x`.
pub fn intertwiner_dim(g: &LieAlgebra, u: &LeftModule, v: &LeftModule) -> usize {
    let hom = hom_module_action(g, u, v);
    hom.invariants().dim()
}

/// Kinds of one-dimensional bimodules over the trivial algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Trivial,
    Symmetric,
    Antisymmetric,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Trivial => "trivial",
            Kind::Symmetric => "symmetric",
            Kind::Antisymmetric => "antisymmetric",
        })
    }
}

/// A one-dimensional bimodule over the trivial algebra `K = ⟨e⟩`, where
/// `e·m = λm`. These are exactly the simple objects.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OneDimBimodule {
    kind: Kind,
    lambda: Scalar,
}

impl OneDimBimodule {
    pub fn new(kind: Kind, lambda: Scalar) -> Result<Self> {
        match (kind, lambda.is_zero()) {
            (Kind::Trivial, false) => Err(Error::Input("the trivial bimodule has λ = 0".into())),
            (Kind::Symmetric | Kind::Antisymmetric, true) => {
                Err(Error::Input(format!("a {kind} one-dimensional bimodule needs λ ≠ 0")))
            }
            _ => Ok(OneDimBimodule { kind, lambda }),
        }
    }

    pub fn trivial() -> Self {
        OneDimBimodule { kind: Kind::Trivial, lambda: Scalar::zero() }
    }

    pub fn symmetric(lambda: Scalar) -> Result<Self> {
        OneDimBimodule::new(Kind::Symmetric, lambda)
    }

    pub fn antisymmetric(lambda: Scalar) -> Result<Self> {
        OneDimBimodule::new(Kind::Antisymmetric, lambda)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    /// The underlying left module over the trivial algebra.
    pub fn left_module(&self) -> LeftModule {
        LeftModule::from_actions(1, 1, vec![Mat::diagonal(std::slice::from_ref(&self.lambda))]).expect("1x1 action")
    }

    pub fn to_bimodule(&self) -> Bimodule {
        let k = trivial_algebra();
        let l = Mat::diagonal(std::slice::from_ref(&self.lambda));
        let r = match self.kind {
            Kind::Symmetric => -&l,
            _ => Mat::zeros(1, 1),
        };
        Bimodule::new(&k, 1, vec![l], vec![r]).expect("one-dimensional bimodules satisfy the axioms")
    }
}

impl fmt::Display for OneDimBimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Trivial => f.write_str("K"),
            Kind::Symmetric => write!(f, "M^s_{}", self.lambda),
            Kind::Antisymmetric => write!(f, "M^a_{}", self.lambda),
        }
    }
}
