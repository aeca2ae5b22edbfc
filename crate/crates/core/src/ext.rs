//! Ext groups between simple bimodules.
//!
//! Two routes are provided. The spectral-sequence route assembles an `E_2`
//! page from cohomology and reads off `Ext^n` only when a zero pattern on the
//! page forces every higher differential to vanish. The closed forms are
//! descriptor-only functions used as independent oracles.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{adjoint_module, hemi_semidirect, lie_quotient, trivial_algebra, LeftModule, LeibnizAlgebra};
use crate::bimodule::{antisymmetric, hom_module_action, symmetric, Bimodule, Kind, OneDimBimodule};
use crate::cohomology::{ce_cohomology, hl_module_structures, leibniz_cohomology};
use crate::error::{Error, Result};
use crate::linear::{self, Mat, Scalar, SubspaceBasis};
use crate::repsl2::{clebsch_gordan, decompose, hom_dim, simple_module, sl2, SL2Module, WeightMultiset};

/// `E_2^{pq}` for `p ≤ pmax`, `q ≤ qmax`, with the coefficient modules that
/// produced each row.
#[derive(Clone, Debug)]
pub struct E2Page {
    pub pmax: usize,
    pub qmax: usize,
    /// `dims[p][q]`.
    pub dims: Vec<Vec<usize>>,
    /// Coefficient module of row `q`.
    pub coeff_modules: Vec<LeftModule>,
}

impl E2Page {
    /// A page with the given dims and no coefficient data.
    pub fn from_dims(dims: Vec<Vec<usize>>) -> Self {
        let pmax = dims.len().saturating_sub(1);
        let qmax = dims.first().map_or(0, |c| c.len().saturating_sub(1));
        assert!(dims.iter().all(|c| c.len() == qmax + 1), "ragged E2 page");
        E2Page { pmax, qmax, dims, coeff_modules: Vec::new() }
    }

    /// Entry at `(p, q)`, zero outside the grid.
    pub fn get(&self, p: usize, q: usize) -> usize {
        if p > self.pmax || q > self.qmax {
            0
        } else {
            self.dims[p][q]
        }
    }

    /// `Σ_{p+q=n} E_2^{pq}`.
    pub fn total(&self, n: usize) -> usize {
        (0..=n).map(|p| self.get(p, n - p)).sum()
    }
}

impl fmt::Display for E2Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in (0..=self.qmax).rev() {
            let row: Vec<String> = (0..=self.pmax).map(|p| self.dims[p][q].to_string()).collect();
            writeln!(f, "q={q}: {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Outcome of the zero-pattern collapse test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CollapseCertificate {
    Certified,
    /// `d_r : E^{p,q} → E^{p+r,q−r+1}` has nonzero source and target.
    NotCertified {
        r: usize,
        p: usize,
        q: usize,
    },
}

impl CollapseCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, CollapseCertificate::Certified)
    }
}

fn certify(page: &E2Page, max_total: Option<usize>) -> CollapseCertificate {
    for p in 0..=page.pmax {
        for q in 0..=page.qmax {
            if page.dims[p][q] == 0 || max_total.is_some_and(|n| p + q > n) {
                continue;
            }
            for r in 2..=q + 1 {
                if page.get(p + r, q + 1 - r) > 0 {
                    return CollapseCertificate::NotCertified { r, p, q };
                }
            }
        }
    }
    CollapseCertificate::Certified
}

/// Certified iff every `d_r`, `r ≥ 2`, on the page has a zero source or a
/// zero target. Entries outside the grid count as zero.
pub fn certify_collapse(page: &E2Page) -> CollapseCertificate {
    certify(page, None)
}

/// As [`certify_collapse`], but only differentials leaving total degree
/// `≤ max_total`, which are the only ones that can affect `Ext^n` for
/// `n ≤ max_total`.
pub fn certify_collapse_through(page: &E2Page, max_total: usize) -> CollapseCertificate {
    certify(page, Some(max_total))
}

#[derive(Clone, Debug)]
pub struct ExtResult {
    pub dims: Vec<usize>,
    pub certificate: CollapseCertificate,
    pub page: E2Page,
}

/// The source of an Ext group, as an `h_Lie`-module together with the way it
/// is made into a bimodule.
#[derive(Clone, Debug)]
pub enum SimpleSource {
    Trivial,
    Antisymmetric(LeftModule),
    Symmetric(LeftModule),
}

/// `f : X → Hom(h, HL^0(h, X))`, `f(m)(x) = x·m + m·x`, in the cocycle
/// coordinates of `HL^0`. Output index of `(i, a)` is `i · dim h + a`.
pub fn sym_base_map(h: &LeibnizAlgebra, x: &Bimodule) -> Result<Mat> {
    let hl0 = leibniz_cohomology(h, x, 0)?;
    let invariants = &hl0.degree(0).cocycles;
    let dh = h.dim();
    let k = invariants.dim();
    let mut f = Mat::zeros(k * dh, x.dim());
    for a in 0..dh {
        let sum = x.left(a) + x.right(a);
        let coords = invariants
            .coordinates_of(&sum)
            .ok_or_else(|| Error::Verification("x·m + m·x is not right invariant".into()))?;
        for i in 0..k {
            for b in 0..x.dim() {
                f.set(i * dh + a, b, coords.get(i, b).clone());
            }
        }
    }
    Ok(f)
}

/// The `h_Lie`-modules `Ext^q(U(h_Lie)^s, X)` for `q = 0..=qmax`:
/// `Ker f`, `Coker f`, then `Hom(h, HL^{q−1}(h, X))`.
pub fn ext_base_sym_modules(h: &LeibnizAlgebra, x: &Bimodule, qmax: usize) -> Result<Vec<LeftModule>> {
    let quotient = lie_quotient(h);
    let g = &quotient.algebra;
    let ad = adjoint_module(h, &quotient);
    let hl = hl_module_structures(h, x, qmax.saturating_sub(1))?;
    let f = sym_base_map(h, x)?;
    let mut out = Vec::with_capacity(qmax + 1);

    let kernel = linear::kernel_basis(&f);
    let zero = SubspaceBasis::zero(x.dim());
    let action = quotient
        .lift
        .iter()
        .map(|&i| linear::restrict_and_project(x.left(i), &kernel, &zero))
        .collect::<Result<Vec<_>>>()?;
    out.push(LeftModule::new(g, kernel.dim(), action)?);

    if qmax >= 1 {
        let hom = hom_module_action(g, &ad, &hl[0]);
        let image = linear::image_basis(&f);
        let full = SubspaceBasis::full(hom.dim());
        let action =
            hom.actions().iter().map(|a| linear::restrict_and_project(a, &full, &image)).collect::<Result<Vec<_>>>()?;
        out.push(LeftModule::new(g, hom.dim() - image.dim(), action)?);
    }
    for q in 2..=qmax {
        out.push(hom_module_action(g, &ad, &hl[q - 1]));
    }
    Ok(out)
}

/// `dim Ext^q(U(h_Lie)^s, X)`.
pub fn ext_base_sym(h: &LeibnizAlgebra, x: &Bimodule, q: usize) -> Result<usize> {
    Ok(ext_base_sym_modules(h, x, q)?[q].dim())
}

fn page_from_coefficients(
    g: &crate::algebra::LieAlgebra,
    y: &LeftModule,
    rows: Vec<LeftModule>,
    pmax: usize,
) -> Result<E2Page> {
    let qmax = rows.len() - 1;
    let mut dims = vec![vec![0; qmax + 1]; pmax + 1];
    let mut coeff_modules = Vec::with_capacity(rows.len());
    for (q, row) in rows.iter().enumerate() {
        let coeff = hom_module_action(g, y, row);
        let h = ce_cohomology(g, &coeff, pmax)?.dims();
        for p in 0..=pmax {
            dims[p][q] = h[p];
        }
        coeff_modules.push(coeff);
    }
    Ok(E2Page { pmax, qmax, dims, coeff_modules })
}

fn check_source(h: &LeibnizAlgebra, y: &LeftModule) -> Result<crate::algebra::LieQuotient> {
    let quotient = lie_quotient(h);
    if y.algebra_dim() != quotient.dim() {
        return Err(Error::Dimension(format!(
            "source module has {} action matrices, h_Lie has dimension {}",
            y.algebra_dim(),
            quotient.dim()
        )));
    }
    y.check(&quotient.algebra)?;
    Ok(quotient)
}

/// `E_2^{pq} = H^p(h_Lie, Hom(Y, HL^q(h, X)))`, converging to `Ext(Y^a, X)`.
pub fn e2_first(h: &LeibnizAlgebra, y: &LeftModule, x: &Bimodule, pmax: usize, qmax: usize) -> Result<E2Page> {
    let quotient = check_source(h, y)?;
    let rows = hl_module_structures(h, x, qmax)?;
    page_from_coefficients(&quotient.algebra, y, rows, pmax)
}

/// `E_2^{pq} = H^p(h_Lie, Hom(Z, Ext^q(U(h_Lie)^s, X)))`, converging to
/// `Ext(Z^s, X)`.
pub fn e2_second(h: &LeibnizAlgebra, z: &LeftModule, x: &Bimodule, pmax: usize, qmax: usize) -> Result<E2Page> {
    let quotient = check_source(h, z)?;
    let rows = ext_base_sym_modules(h, x, qmax)?;
    page_from_coefficients(&quotient.algebra, z, rows, pmax)
}

/// `dim Ext^n(S, X)` for `n ≤ nmax` through the matching spectral sequence.
/// Fails with `CollapseNotCertified` if the page does not force collapse.
pub fn ext_dims(h: &LeibnizAlgebra, source: &SimpleSource, x: &Bimodule, nmax: usize) -> Result<ExtResult> {
    let hl_dim = lie_quotient(h).dim();
    let pmax = hl_dim.min(nmax + 1);
    let page = match source {
        SimpleSource::Trivial => e2_first(h, &LeftModule::trivial(hl_dim, 1), x, pmax, nmax)?,
        SimpleSource::Antisymmetric(y) => e2_first(h, y, x, pmax, nmax)?,
        SimpleSource::Symmetric(z) => e2_second(h, z, x, pmax, nmax)?,
    };
    let certificate = certify_collapse_through(&page, nmax);
    if let CollapseCertificate::NotCertified { r, p, q } = certificate {
        return Err(Error::CollapseNotCertified { r, p, q });
    }
    let dims = (0..=nmax).map(|n| page.total(n)).collect();
    Ok(ExtResult { dims, certificate, page })
}

/// `N̂ = Coker(N → Hom(h, N))`, `n ↦ (x ↦ x·n)`, as an `h_Lie`-module.
pub fn nhat(h: &LeibnizAlgebra, n: &LeftModule) -> Result<LeftModule> {
    let quotient = check_source(h, n)?;
    let g = &quotient.algebra;
    let ad = adjoint_module(h, &quotient);
    let hom = hom_module_action(g, &ad, n);
    let rho = quotient.pull_back(n.actions());
    let dh = h.dim();
    let mut map = Mat::zeros(n.dim() * dh, n.dim());
    for (a, r) in rho.iter().enumerate() {
        for i in 0..n.dim() {
            for b in 0..n.dim() {
                map.set(i * dh + a, b, r.get(i, b).clone());
            }
        }
    }
    let image = linear::image_basis(&map);
    let full = SubspaceBasis::full(hom.dim());
    let action =
        hom.actions().iter().map(|a| linear::restrict_and_project(a, &full, &image)).collect::<Result<Vec<_>>>()?;
    LeftModule::new(g, hom.dim() - image.dim(), action)
}

fn count<const N: usize>(p: usize, candidates: [Option<usize>; N]) -> usize {
    candidates.iter().filter(|&&c| c == Some(p)).count()
}

/// `dim Ext^1(V_p^s, V_m^a)` over `V_n ⋊ sl2`, weight 0 meaning the
/// trivial bimodule, with repeated list entries counted with multiplicity.
pub fn ext1_hemi_closed(n: usize, p: usize, m: usize) -> usize {
    assert!(n >= 1, "hemi-semidirect products need n ≥ 1");
    match m {
        0 => count(p, [Some(n), Some(2)]),
        1 => count(p, [Some(n + 1), n.checked_sub(1), Some(3)]),
        _ => clebsch_gordan(n, m).multiplicity(p) + count(p, [Some(m + 2), Some(m - 2)]),
    }
}

/// The nine-case table of `Ext^n` between one-dimensional bimodules over the
/// trivial algebra, for `n = 0..=nmax`.
pub fn ext_trivial_closed(mk: &OneDimBimodule, nk: &OneDimBimodule, nmax: usize) -> Vec<usize> {
    (0..=nmax)
        .map(|n| match (mk.kind(), nk.kind()) {
            (Kind::Trivial, Kind::Trivial) => {
                if n == 0 {
                    1
                } else {
                    2
                }
            }
            (a, b) if a == b && mk.lambda() == nk.lambda() && n <= 1 => 1,
            _ => 0,
        })
        .collect()
}

/// `Ext^n(M, N)` between one-dimensional bimodules over the trivial algebra
/// via the spectral sequences.
pub fn ext_trivial_spectral(mk: &OneDimBimodule, nk: &OneDimBimodule, nmax: usize) -> Result<ExtResult> {
    let source = match mk.kind() {
        Kind::Trivial => SimpleSource::Trivial,
        Kind::Antisymmetric => SimpleSource::Antisymmetric(mk.left_module()),
        Kind::Symmetric => SimpleSource::Symmetric(mk.left_module()),
    };
    ext_dims(&trivial_algebra(), &source, &nk.to_bimodule(), nmax)
}

/// A simple bimodule over `V_n ⋊ sl2`: trivial, or `V_p` made symmetric or
/// antisymmetric with `p ≥ 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum HemiSimple {
    Trivial,
    Symmetric(usize),
    Antisymmetric(usize),
}

impl HemiSimple {
    /// Weight 0 is the trivial bimodule whatever the kind.
    pub fn symmetric(p: usize) -> Self {
        if p == 0 {
            HemiSimple::Trivial
        } else {
            HemiSimple::Symmetric(p)
        }
    }

    pub fn antisymmetric(m: usize) -> Self {
        if m == 0 {
            HemiSimple::Trivial
        } else {
            HemiSimple::Antisymmetric(m)
        }
    }

    pub fn weight(&self) -> usize {
        match *self {
            HemiSimple::Trivial => 0,
            HemiSimple::Symmetric(p) | HemiSimple::Antisymmetric(p) => p,
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            HemiSimple::Trivial => Kind::Trivial,
            HemiSimple::Symmetric(_) => Kind::Symmetric,
            HemiSimple::Antisymmetric(_) => Kind::Antisymmetric,
        }
    }

    /// Whether `Ext^1` out of this simple can be nonzero.
    pub fn can_be_source(&self) -> bool {
        !matches!(self, HemiSimple::Antisymmetric(_))
    }

    /// Whether `Ext^1` into this simple can be nonzero.
    pub fn can_be_target(&self) -> bool {
        !matches!(self, HemiSimple::Symmetric(_))
    }

    /// The bimodule over `h`.
    pub fn bimodule(&self, h: &LeibnizAlgebra) -> Result<Bimodule> {
        let v = simple_module(self.weight()).into_module();
        match self {
            HemiSimple::Symmetric(_) => symmetric(h, &v),
            _ => antisymmetric(h, &v),
        }
    }

    pub fn source(&self) -> SimpleSource {
        let v = simple_module(self.weight()).into_module();
        match self {
            HemiSimple::Trivial => SimpleSource::Trivial,
            HemiSimple::Symmetric(_) => SimpleSource::Symmetric(v),
            HemiSimple::Antisymmetric(_) => SimpleSource::Antisymmetric(v),
        }
    }
}

impl fmt::Display for HemiSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HemiSimple::Trivial => f.write_str("V0"),
            HemiSimple::Symmetric(p) => write!(f, "V{p}^s"),
            HemiSimple::Antisymmetric(m) => write!(f, "V{m}^a"),
        }
    }
}

impl FromStr for HemiSimple {
    type Err = Error;

    /// Accepts `K`, `V0`, `Vp^s` and `Vm^a`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "K" {
            return Ok(HemiSimple::Trivial);
        }
        let bad = || Error::Input(format!("expected K, V0, Vp^s or Vm^a, got {s:?}"));
        let rest = s.strip_prefix('V').ok_or_else(bad)?;
        let (weight, kind) = match rest.split_once('^') {
            Some((w, k)) => (w, Some(k)),
            None => (rest, None),
        };
        let w: usize = weight.parse().map_err(|_| bad())?;
        match kind {
            None if w == 0 => Ok(HemiSimple::Trivial),
            Some("s") => Ok(HemiSimple::symmetric(w)),
            Some("a") => Ok(HemiSimple::antisymmetric(w)),
            _ => Err(bad()),
        }
    }
}

/// The hemi-semidirect product `V_n ⋊ sl2`.
pub fn hemi_algebra(n: usize) -> Result<LeibnizAlgebra> {
    if n == 0 {
        return Err(Error::Input("V_0 ⋊ sl2 is not simple; need n ≥ 1".into()));
    }
    hemi_semidirect(&sl2(), simple_module(n).module())
}

/// `dim Ext^degree(src, dst)` over `V_n ⋊ sl2` from the closed forms.
pub fn ext_simple_closed(n: usize, src: HemiSimple, dst: HemiSimple, degree: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Input("need n ≥ 1".into()));
    }
    // Multiplicity of V_w in h* ≅ h = V_n ⊕ V_2.
    let in_h = |w: usize| usize::from(w == n) + usize::from(w == 2);
    match degree {
        0 => Ok(usize::from(src == dst)),
        1 if src.can_be_source() && dst.can_be_target() => Ok(ext1_hemi_closed(n, src.weight(), dst.weight())),
        2 => match (src, dst) {
            (HemiSimple::Symmetric(p), HemiSimple::Antisymmetric(m)) => Ok(in_h(p) * in_h(m)),
            _ => Ok(0),
        },
        1 => Ok(0),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

/// `dim Ext^1(src, dst)` as `dim Hom(V_p, N̂)` computed by linear algebra.
/// Only meaningful for trivial or symmetric sources and trivial or
/// antisymmetric targets.
pub fn ext1_hemi_nhat(n: usize, src: HemiSimple, dst: HemiSimple) -> Result<usize> {
    if !src.can_be_source() || !dst.can_be_target() {
        return Err(Error::Input(format!("no N̂ description for Ext^1({src}, {dst})")));
    }
    let h = hemi_algebra(n)?;
    let hat = nhat(&h, simple_module(dst.weight()).module())?;
    let decomposition = decompose(&SL2Module::new(hat)?)?;
    let source: WeightMultiset = [(src.weight(), 1)].into_iter().collect();
    Ok(hom_dim(&source, &decomposition))
}

/// `Ext^n(src, dst)` over `V_n ⋊ sl2` through the spectral sequences.
pub fn ext_hemi_spectral(n: usize, src: HemiSimple, dst: HemiSimple, nmax: usize) -> Result<ExtResult> {
    let h = hemi_algebra(n)?;
    ext_dims(&h, &src.source(), &dst.bimodule(&h)?, nmax)
}

/// Independent recomputation of `dim Ext^degree(src, dst)`: the `N̂` route in
/// degree 1 where it applies, the spectral sequences otherwise.
pub fn ext_hemi_oracle(n: usize, src: HemiSimple, dst: HemiSimple, degree: usize) -> Result<usize> {
    if degree == 1 && src.can_be_source() && dst.can_be_target() {
        return ext1_hemi_nhat(n, src, dst);
    }
    Ok(ext_hemi_spectral(n, src, dst, degree)?.dims[degree])
}

/// A bimodule with the given left and right `1×1` actions over the trivial
/// algebra; handy for tests and examples.
pub fn one_dim(kind: Kind, lambda: i64) -> Result<OneDimBimodule> {
    match kind {
        Kind::Trivial => Ok(OneDimBimodule::trivial()),
        k => OneDimBimodule::new(k, Scalar::from(lambda)),
    }
}
