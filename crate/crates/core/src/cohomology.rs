//! Leibniz cohomology `HL^n(h, M)`, Chevalley–Eilenberg cohomology
//! `H^p(g, M)`, and the closed forms over the one-dimensional algebra.

use std::collections::HashMap;

use crate::algebra::{lie_quotient, LeftModule, LeibnizAlgebra, LieAlgebra, LieQuotient};
use crate::bimodule::{antisymmetric_kernel, m_zero_subspace, right_invariants, Bimodule};
use crate::error::{Error, Result};
use crate::linear::{self, Mat, Scalar, SubspaceBasis};

/// Spaces `C^0, …, C^N` with differentials `d^n : C^n → C^{n+1}` for `n < N`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    dims: Vec<usize>,
    differentials: Vec<Mat>,
}

impl CochainComplex {
    /// Checks shapes and `d^{n+1} d^n = 0`.
    pub fn new(dims: Vec<usize>, differentials: Vec<Mat>) -> Result<Self> {
        if dims.len() != differentials.len() + 1 {
            return Err(Error::Dimension(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (n, d) in differentials.iter().enumerate() {
            if d.cols() != dims[n] || d.rows() != dims[n + 1] {
                return Err(Error::Dimension(format!(
                    "d^{n} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[n + 1],
                    dims[n]
                )));
            }
        }
        for (n, pair) in differentials.windows(2).enumerate() {
            if !(&pair[1] * &pair[0]).is_zero() {
                return Err(Error::Complex { degree: n });
            }
        }
        Ok(CochainComplex { dims, differentials })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, n: usize) -> &Mat {
        &self.differentials[n]
    }

    /// Cohomology in every degree that has an outgoing differential.
    pub fn cohomology(&self) -> CohomologyResult {
        let degrees = (0..self.differentials.len())
            .map(|n| {
                let cocycles = linear::kernel_basis(&self.differentials[n]);
                let coboundaries = if n == 0 {
                    SubspaceBasis::zero(self.dims[0])
                } else {
                    linear::image_basis(&self.differentials[n - 1])
                };
                DegreeCohomology::new(cocycles, coboundaries)
            })
            .collect();
        CohomologyResult { degrees }
    }
}

/// Cocycles and coboundaries in one degree.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    pub dim: usize,
    pub cocycles: SubspaceBasis,
    pub coboundaries: SubspaceBasis,
}

impl DegreeCohomology {
    fn new(cocycles: SubspaceBasis, coboundaries: SubspaceBasis) -> Self {
        assert!(cocycles.contains_subspace(&coboundaries), "coboundaries are not cocycles");
        DegreeCohomology { dim: cocycles.dim() - coboundaries.dim(), cocycles, coboundaries }
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub degrees: Vec<DegreeCohomology>,
}

impl CohomologyResult {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn degree(&self, n: usize) -> &DegreeCohomology {
        &self.degrees[n]
    }
}

fn pow(d: usize, n: usize) -> usize {
    d.checked_pow(n as u32).expect("tensor power overflows")
}

/// Digits of a row-major tensor index, most significant first.
fn digits(mut index: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in (0..n).rev() {
        out[slot] = index % d;
        index /= d;
    }
    out
}

fn tensor_index(t: impl IntoIterator<Item = usize>, d: usize) -> usize {
    t.into_iter().fold(0, |acc, i| acc * d + i)
}

/// Adds `coeff · block` at block position `(row, col)` of a matrix whose
/// blocks are `dm × dm`.
fn add_block(out: &mut Mat, row: usize, col: usize, dm: usize, coeff: &Scalar, block: &Mat) {
    for a in 0..dm {
        for b in 0..dm {
            let x = block.get(a, b);
            if !x.is_zero() {
                out.add_at(row * dm + a, col * dm + b, &(coeff * x));
            }
        }
    }
}

fn add_identity_block(out: &mut Mat, row: usize, col: usize, dm: usize, coeff: &Scalar) {
    for a in 0..dm {
        out.add_at(row * dm + a, col * dm + a, coeff);
    }
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from(-1)
    }
}

fn same_algebra(h: &LeibnizAlgebra, m: &Bimodule) -> Result<()> {
    if m.algebra().constants() != h.constants() {
        return Err(Error::Dimension("bimodule is defined over a different algebra".into()));
    }
    Ok(())
}

/// Matrix of `d^n : Hom(h^{⊗n}, M) → Hom(h^{⊗n+1}, M)`.
///
/// Basis of `Hom(h^{⊗n}, M)`: tensor index times `dim M` plus module index.
pub fn leibniz_differential(h: &LeibnizAlgebra, m: &Bimodule, n: usize) -> Mat {
    let d = h.dim();
    let dm = m.dim();
    let rows = pow(d, n + 1);
    let mut out = Mat::zeros(rows * dm, pow(d, n) * dm);
    let nonzero_brackets: Vec<Vec<(usize, Scalar)>> = (0..d * d)
        .map(|ij| {
            h.bracket_basis(ij / d, ij % d)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
        .collect();
    for s_idx in 0..rows {
        let s = digits(s_idx, d, n + 1);
        for i in 0..n {
            let t = s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v);
            add_block(&mut out, s_idx, tensor_index(t, d), dm, &sign(i), m.left(s[i]));
        }
        let t = tensor_index(s[..n].iter().copied(), d);
        let right_sign = if n == 0 { Scalar::from(-1) } else { sign(n - 1) };
        add_block(&mut out, s_idx, t, dm, &right_sign, m.right(s[n]));
        for i in 0..n {
            for j in i + 1..=n {
                for (k, c) in &nonzero_brackets[s[i] * d + s[j]] {
                    let t = s
                        .iter()
                        .enumerate()
                        .filter(|&(pos, _)| pos != i)
                        .map(|(pos, &v)| if pos == j { *k } else { v });
                    add_identity_block(&mut out, s_idx, tensor_index(t, d), dm, &(&sign(i + 1) * c));
                }
            }
        }
    }
    out
}

/// The complex `CL^0 → … → CL^{qmax+1}` with differentials `d^0 … d^qmax`.
pub fn leibniz_complex(h: &LeibnizAlgebra, m: &Bimodule, qmax: usize) -> Result<CochainComplex> {
    same_algebra(h, m)?;
    let dims = (0..=qmax + 1).map(|n| pow(h.dim(), n) * m.dim()).collect();
    let diffs = (0..=qmax).map(|n| leibniz_differential(h, m, n)).collect();
    CochainComplex::new(dims, diffs)
}

/// `HL^n(h, M)` for `n = 0..=qmax`.
pub fn leibniz_cohomology(h: &LeibnizAlgebra, m: &Bimodule, qmax: usize) -> Result<CohomologyResult> {
    let result = leibniz_complex(h, m, qmax)?.cohomology();
    debug_assert_eq!(result.degrees[0].dim, right_invariants(m).dim());
    Ok(result)
}

/// Action of the basis element `b_x` of `h` on `Hom(h^{⊗q}, M)`:
/// `(x·f)(y_1…y_q) = x·f(y_1…y_q) − Σ_i f(y_1…[x,y_i]…y_q)`.
pub fn cochain_action(h: &LeibnizAlgebra, m: &Bimodule, q: usize, x: usize) -> Mat {
    let d = h.dim();
    let dm = m.dim();
    let n = pow(d, q);
    let mut out = Mat::zeros(n * dm, n * dm);
    let ad = h.left_mult(x);
    let minus_one = Scalar::from(-1);
    for s_idx in 0..n {
        add_block(&mut out, s_idx, s_idx, dm, &Scalar::one(), m.left(x));
        let s = digits(s_idx, d, q);
        for slot in 0..q {
            for k in 0..d {
                let c = ad.get(k, s[slot]);
                if c.is_zero() {
                    continue;
                }
                let t = s.iter().enumerate().map(|(pos, &v)| if pos == slot { k } else { v });
                add_identity_block(&mut out, s_idx, tensor_index(t, d), dm, &(&minus_one * c));
            }
        }
    }
    out
}

/// `HL^q(h, M)` for `q = 0..=qmax` as `h_Lie`-modules.
pub fn hl_module_structures(h: &LeibnizAlgebra, m: &Bimodule, qmax: usize) -> Result<Vec<LeftModule>> {
    let quotient = lie_quotient(h);
    let result = leibniz_cohomology(h, m, qmax)?;
    (0..=qmax).map(|q| induced_module(h, m, &quotient, q, result.degree(q))).collect()
}

/// `HL^q(h, M)` as an `h_Lie`-module.
pub fn hl_module_structure(h: &LeibnizAlgebra, m: &Bimodule, q: usize) -> Result<LeftModule> {
    let quotient = lie_quotient(h);
    let result = leibniz_cohomology(h, m, q)?;
    induced_module(h, m, &quotient, q, result.degree(q))
}

fn induced_module(
    h: &LeibnizAlgebra,
    m: &Bimodule,
    quotient: &LieQuotient,
    q: usize,
    degree: &DegreeCohomology,
) -> Result<LeftModule> {
    let action = quotient
        .lift
        .iter()
        .map(|&x| linear::restrict_and_project(&cochain_action(h, m, q, x), &degree.cocycles, &degree.coboundaries))
        .collect::<Result<Vec<_>>>()?;
    LeftModule::new(&quotient.algebra, degree.dim, action)
}

/// Increasing index tuples of length `p` in lexicographic order.
fn subsets(d: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            go(i + 1, d, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, p, &mut Vec::new(), &mut out);
    out
}

/// Chevalley–Eilenberg differential `Λ^p g* ⊗ M → Λ^{p+1} g* ⊗ M`.
fn ce_differential(g: &LieAlgebra, m: &LeftModule, p: usize) -> Mat {
    let d = g.dim();
    let dm = m.dim();
    let sources = subsets(d, p);
    let targets = subsets(d, p + 1);
    let index: HashMap<&[usize], usize> = sources.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut out = Mat::zeros(targets.len() * dm, sources.len() * dm);
    for (row, s) in targets.iter().enumerate() {
        let without = |skip: &[usize]| -> Vec<usize> {
            s.iter().enumerate().filter(|(pos, _)| !skip.contains(pos)).map(|(_, &v)| v).collect()
        };
        for i in 0..=p {
            let col = index[without(&[i]).as_slice()];
            add_block(&mut out, row, col, dm, &sign(i), m.action(s[i]));
        }
        for i in 0..=p {
            for j in i + 1..=p {
                let rest = without(&[i, j]);
                for (k, c) in g.bracket_basis(s[i], s[j]).iter().enumerate() {
                    if c.is_zero() || rest.contains(&k) {
                        continue;
                    }
                    // Sorting (k, rest…) moves k past every smaller entry.
                    let shift = rest.iter().filter(|&&r| r < k).count();
                    let mut t = rest.clone();
                    t.insert(shift, k);
                    let coeff = &(&sign(i + j + shift) * c);
                    add_identity_block(&mut out, row, index[t.as_slice()], dm, coeff);
                }
            }
        }
    }
    out
}

/// `H^p(g, M)` for `p = 0..=pmax`; degrees above `dim g` come out as 0.
pub fn ce_cohomology(g: &LieAlgebra, m: &LeftModule, pmax: usize) -> Result<CohomologyResult> {
    if m.algebra_dim() != g.dim() {
        return Err(Error::Dimension(format!(
            "module over an algebra of dimension {}, expected {}",
            m.algebra_dim(),
            g.dim()
        )));
    }
    let dims = (0..=pmax + 1).map(|p| subsets(g.dim(), p).len() * m.dim()).collect();
    let diffs = (0..=pmax).map(|p| ce_differential(g, m, p)).collect();
    Ok(CochainComplex::new(dims, diffs)?.cohomology())
}

/// Shortcut `H^p(g, M) = H^p(g, K) ⊗ M^g`, valid for semisimple `g`.
pub fn ce_cohomology_weyl(g: &LieAlgebra, m: &LeftModule, pmax: usize) -> Result<Vec<usize>> {
    let scalar = ce_cohomology(g, &LeftModule::trivial(g.dim(), 1), pmax)?.dims();
    let invariants = m.invariants().dim();
    Ok(scalar.into_iter().map(|k| k * invariants).collect())
}

/// `HL^n` over the one-dimensional algebra from `M^h`, `M^0`, `M_0` and
/// `M·h`: `M^h` for `n = 0`, `M^0/(M·h)` for odd `n`, `M^h/M_0` for even `n > 0`.
pub fn trivial_algebra_closed_form(m: &Bimodule, qmax: usize) -> Result<Vec<usize>> {
    let m_zero = m_zero_subspace(m)?.dim();
    let invariants = right_invariants(m).dim();
    let image = linear::rank(m.right(0));
    let kernel = antisymmetric_kernel(m).dim();
    Ok((0..=qmax)
        .map(|n| match n {
            0 => invariants,
            n if n % 2 == 1 => m_zero - image,
            _ => invariants - kernel,
        })
        .collect())
}
