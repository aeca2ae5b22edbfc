//! Finite-dimensional representations of sl2.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{LeftModule, LieAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::linear::{self, Mat, Scalar};

pub const E: usize = 0;
pub const H: usize = 1;
pub const F: usize = 2;

/// sl2 on the basis `e, h, f` with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    let mut c = StructureConstants::zero(3);
    for (i, j, k, v) in [(H, E, E, 2), (E, H, E, -2), (H, F, F, -2), (F, H, F, 2), (E, F, H, 1), (F, E, H, -1)] {
        c.set(i, j, k, Scalar::from(v));
    }
    LieAlgebra::new(c, Some(vec!["e".into(), "h".into(), "f".into()])).expect("sl2 is a Lie algebra")
}

/// A module over [`sl2`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SL2Module(LeftModule);

impl SL2Module {
    pub fn new(module: LeftModule) -> Result<Self> {
        module.check(&sl2())?;
        Ok(SL2Module(module))
    }

    pub fn module(&self) -> &LeftModule {
        &self.0
    }

    pub fn into_module(self) -> LeftModule {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn direct_sum(&self, other: &SL2Module) -> SL2Module {
        SL2Module(self.0.direct_sum(&other.0))
    }
}

/// The simple module `V_m` on the weight basis `v_0, …, v_m`.
pub fn simple_module(m: usize) -> SL2Module {
    let d = m + 1;
    let mut e = Mat::zeros(d, d);
    let mut h = Mat::zeros(d, d);
    let mut f = Mat::zeros(d, d);
    for k in 0..d {
        h.set(k, k, Scalar::from(m as i64 - 2 * k as i64));
        if k > 0 {
            e.set(k - 1, k, Scalar::from((k * (m - k + 1)) as i64));
        }
        if k < m {
            f.set(k + 1, k, Scalar::one());
        }
    }
    SL2Module(LeftModule::from_actions(3, d, vec![e, h, f]).expect("shapes agree"))
}

/// `ρ^u_x ⊗ I + I ⊗ ρ^v_x`.
pub fn tensor(u: &SL2Module, v: &SL2Module) -> SL2Module {
    let iu = Mat::identity(u.dim());
    let iv = Mat::identity(v.dim());
    let action = (0..3).map(|x| &linear::kron(u.0.action(x), &iv) + &linear::kron(&iu, v.0.action(x))).collect();
    SL2Module(LeftModule::from_actions(3, u.dim() * v.dim(), action).expect("shapes agree"))
}

/// `x ↦ −ρ_xᵀ`.
pub fn dual(v: &SL2Module) -> SL2Module {
    let action = v.0.actions().iter().map(|a| -&a.transpose()).collect();
    SL2Module(LeftModule::from_actions(3, v.dim(), action).expect("shapes agree"))
}

/// Multiplicities of the simple summands `V_m`, keyed by highest weight.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct WeightMultiset(BTreeMap<usize, usize>);

impl WeightMultiset {
    pub fn new() -> Self {
        WeightMultiset(BTreeMap::new())
    }

    pub fn insert(&mut self, m: usize, count: usize) {
        if count > 0 {
            *self.0.entry(m).or_default() += count;
        }
    }

    pub fn multiplicity(&self, m: usize) -> usize {
        self.0.get(&m).copied().unwrap_or(0)
    }

    /// Total dimension `Σ (m+1)·mult`.
    pub fn dim(&self) -> usize {
        self.0.iter().map(|(m, c)| (m + 1) * c).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&m, &c)| (m, c))
    }

    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.insert(m, c);
        }
        out
    }
}

impl FromIterator<(usize, usize)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for (m, c) in iter {
            out.insert(m, c);
        }
        out
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().rev().map(|(m, c)| format!("{m}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Highest-weight multiplicities read off from the `h`-eigenspaces:
/// `mult(V_m) = dim ker(ρ_h − m) − dim ker(ρ_h − m − 2)`.
pub fn decompose(v: &SL2Module) -> Result<WeightMultiset> {
    let rho = v.0.action(H);
    let d = v.dim();
    let bound = d as i64;
    let eigen_dims: BTreeMap<i64, usize> = if is_diagonal(rho) {
        let mut counts = BTreeMap::new();
        for i in 0..d {
            let x = rho.get(i, i);
            match x.to_i64() {
                Some(w) if x.is_integer() => *counts.entry(w).or_default() += 1,
                _ => return Err(Error::NonIntegralWeight { covered: 0, dim: d }),
            }
        }
        counts
    } else {
        (-bound..=bound)
            .map(|w| {
                let shifted = rho - &Mat::identity(d).scale(&Scalar::from(w));
                (w, d - linear::rank(&shifted))
            })
            .filter(|&(_, k)| k > 0)
            .collect()
    };
    let covered: usize = eigen_dims.values().sum();
    if covered != d {
        return Err(Error::NonIntegralWeight { covered, dim: d });
    }
    let at = |w: i64| eigen_dims.get(&w).copied().unwrap_or(0);
    let mut out = WeightMultiset::new();
    for (&w, &k) in eigen_dims.range(0..) {
        let above = at(w + 2);
        if above > k {
            return Err(Error::Input(format!("weight {w} has fewer vectors than weight {}", w + 2)));
        }
        out.insert(w as usize, k - above);
    }
    assert_eq!(out.dim(), d, "decomposition does not conserve dimension");
    Ok(out)
}

fn is_diagonal(m: &Mat) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m.get(i, j).is_zero()))
}

/// `V_m ⊗ V_n = V_{m+n} ⊕ V_{m+n−2} ⊕ … ⊕ V_{|m−n|}`.
pub fn clebsch_gordan(m: usize, n: usize) -> WeightMultiset {
    (m.abs_diff(n)..=m + n).step_by(2).map(|w| (w, 1)).collect()
}

/// `dim Hom(A, B)` for semisimple modules with the given summands.
pub fn hom_dim(a: &WeightMultiset, b: &WeightMultiset) -> usize {
    a.iter().map(|(m, c)| c * b.multiplicity(m)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(pairs: &[(usize, usize)]) -> WeightMultiset {
        pairs.iter().copied().collect()
    }

    #[test]
    fn simple_modules_are_modules() {
        let g = sl2();
        for m in 0..8 {
            let v = simple_module(m);
            assert_eq!(v.dim(), m + 1);
            v.module().check(&g).unwrap();
        }
        let h2: Vec<Scalar> = (0..3).map(|i| simple_module(2).module().action(H).get(i, i).clone()).collect();
        assert_eq!(h2, vec![Scalar::from(2), Scalar::zero(), Scalar::from(-2)]);
        assert!(simple_module(0).module().actions().iter().all(Mat::is_zero));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor(&simple_module(2), &simple_module(3)).dim(), 12);
        assert_eq!(decompose(&tensor(&simple_module(1), &simple_module(1))).unwrap(), ws(&[(2, 1), (0, 1)]));
        assert_eq!(decompose(&tensor(&simple_module(0), &simple_module(4))).unwrap(), ws(&[(4, 1)]));
        assert_eq!(decompose(&tensor(&simple_module(2), &simple_module(2))).unwrap(), ws(&[(4, 1), (2, 1), (0, 1)]));
        tensor(&simple_module(2), &simple_module(1)).module().check(&sl2()).unwrap();
    }

    #[test]
    fn duals_are_self_dual() {
        assert_eq!(dual(&simple_module(0)), simple_module(0));
        for n in 0..=6 {
            let d = dual(&simple_module(n));
            d.module().check(&sl2()).unwrap();
            assert_eq!(decompose(&d).unwrap(), ws(&[(n, 1)]));
        }
        assert_eq!(decompose(&dual(&dual(&simple_module(3)))).unwrap(), ws(&[(3, 1)]));
    }

    #[test]
    fn decompose_non_diagonal_basis() {
        // V_2 ⊕ V_0 in a basis mixing the two zero-weight vectors and more.
        let v = simple_module(2).direct_sum(&simple_module(0));
        let change = Mat::from_i64(&[&[1, 1, 0, 1], &[0, 1, 1, 0], &[0, 0, 1, 2], &[0, 0, 0, 1]]);
        let w = SL2Module::new(v.module().conjugate(&change).unwrap()).unwrap();
        assert_eq!(decompose(&w).unwrap(), ws(&[(2, 1), (0, 1)]));
    }

    #[test]
    fn decompose_rejects_bad_weights() {
        let half = Mat::diagonal(&[Scalar::new(1, 2)]);
        let m = LeftModule::from_actions(3, 1, vec![Mat::zeros(1, 1), half, Mat::zeros(1, 1)]).unwrap();
        assert!(matches!(decompose(&SL2Module(m)), Err(Error::NonIntegralWeight { .. })));
    }

    #[test]
    fn clebsch_gordan_examples() {
        assert_eq!(clebsch_gordan(2, 2), ws(&[(4, 1), (2, 1), (0, 1)]));
        assert_eq!(clebsch_gordan(0, 5), ws(&[(5, 1)]));
        assert_eq!(clebsch_gordan(2, 1), ws(&[(3, 1), (1, 1)]));
        assert_eq!(clebsch_gordan(2, 1).to_string(), "{3:1, 1:1}");
    }

    #[test]
    fn clebsch_gordan_matches_decomposition() {
        for m in 0..=8 {
            for n in 0..=8 {
                let t = tensor(&simple_module(m), &simple_module(n));
                assert_eq!(decompose(&t).unwrap(), clebsch_gordan(m, n), "V_{m} ⊗ V_{n}");
            }
        }
    }

    #[test]
    fn hom_dim_examples() {
        assert_eq!(hom_dim(&ws(&[(2, 1)]), &ws(&[(2, 1)])), 1);
        assert_eq!(hom_dim(&ws(&[(1, 1)]), &ws(&[(3, 1)])), 0);
        assert_eq!(hom_dim(&ws(&[(2, 2)]), &ws(&[(2, 2)])), 4);
    }
}
