//! Gabriel quivers: simple bimodules as vertices and `dim Ext^1(S, T)`
//! arrows `S → T`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::bimodule::{Kind, OneDimBimodule};
use crate::error::{Error, Result};
use crate::ext::{ext1_hemi_nhat, ext_simple_closed, ext_trivial_closed, HemiSimple};
use crate::linear::Scalar;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Scalar>,
}

impl Vertex {
    fn hemi(s: HemiSimple) -> Self {
        Vertex { label: s.to_string(), kind: s.kind(), weight: Some(s.weight()), lambda: None }
    }

    fn one_dim(b: &OneDimBimodule) -> Self {
        Vertex { label: b.to_string(), kind: b.kind(), weight: None, lambda: Some(b.lambda().clone()) }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub mult: usize,
}

/// Vertices in construction order; edges sorted by `(src, dst)`, one record
/// per ordered pair with positive multiplicity.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    /// Highest weight kept when an infinite quiver was truncated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<usize>,
}

impl Quiver {
    /// Number of arrows between two labelled vertices.
    pub fn multiplicity(&self, src: &str, dst: &str) -> usize {
        let index = |l: &str| self.vertices.iter().position(|v| v.label == l);
        match (index(src), index(dst)) {
            (Some(s), Some(d)) => self.edges.iter().find(|e| e.src == s && e.dst == d).map_or(0, |e| e.mult),
            _ => 0,
        }
    }

    /// `(src label, dst label) → multiplicity`.
    pub fn edge_map(&self) -> BTreeMap<(String, String), usize> {
        self.edges
            .iter()
            .map(|e| ((self.vertices[e.src].label.clone(), self.vertices[e.dst].label.clone()), e.mult))
            .collect()
    }

    pub fn arrow_count(&self) -> usize {
        self.edges.iter().map(|e| e.mult).sum()
    }

    /// Graphviz text; a multiplicity-`k` edge becomes `k` parallel edges.
    pub fn to_dot(&self) -> String {
        if self.vertices.is_empty() {
            return "digraph G { }".to_string();
        }
        let mut out = String::from("digraph G {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", v.label));
        }
        for e in &self.edges {
            for _ in 0..e.mult {
                out.push_str(&format!("  \"{}\" -> \"{}\";\n", self.vertices[e.src].label, self.vertices[e.dst].label));
            }
        }
        out.push('}');
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("quiver serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let q: Quiver = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let n = q.vertices.len();
        if q.edges.iter().any(|e| e.src >= n || e.dst >= n || e.mult == 0) {
            return Err(Error::Input("edge refers to a missing vertex or has multiplicity 0".into()));
        }
        Ok(q)
    }

    fn from_weights(vertices: Vec<Vertex>, mut mult: impl FnMut(usize, usize) -> Result<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        for s in 0..vertices.len() {
            for d in 0..vertices.len() {
                let m = mult(s, d)?;
                if m > 0 {
                    edges.push(Edge { src: s, dst: d, mult: m });
                }
            }
        }
        Ok(Quiver { vertices, edges, max_weight: None })
    }
}

/// The quiver of one-dimensional bimodules over the trivial algebra: `K`
/// and `M^a_λ`, `M^s_λ` for each given `λ`.
pub fn quiver_trivial(lambdas: &[Scalar]) -> Result<Quiver> {
    if lambdas.is_empty() {
        return Err(Error::Input("need at least one eigenvalue".into()));
    }
    let distinct: BTreeSet<String> = lambdas.iter().map(Scalar::to_string).collect();
    if distinct.len() != lambdas.len() {
        return Err(Error::Input("eigenvalues must be distinct".into()));
    }
    let mut simples = vec![OneDimBimodule::trivial()];
    for l in lambdas {
        simples.push(OneDimBimodule::antisymmetric(l.clone())?);
        simples.push(OneDimBimodule::symmetric(l.clone())?);
    }
    let vertices = simples.iter().map(Vertex::one_dim).collect();
    Quiver::from_weights(vertices, |s, d| Ok(ext_trivial_closed(&simples[s], &simples[d], 1)[1]))
}

/// The quiver of `V_n ⋊ sl2` truncated to highest weights `≤ max_weight`.
/// With `verify`, every multiplicity between an admissible pair is
/// recomputed as `dim Hom(V_p, N̂)` and must agree.
pub fn quiver_hemi(n: usize, max_weight: usize, verify: bool) -> Result<Quiver> {
    if n == 0 {
        return Err(Error::Input("need n ≥ 1".into()));
    }
    let mut simples = vec![HemiSimple::Trivial];
    for m in 1..=max_weight {
        simples.push(HemiSimple::Symmetric(m));
        simples.push(HemiSimple::Antisymmetric(m));
    }
    let vertices = simples.iter().copied().map(Vertex::hemi).collect();
    let mut q = Quiver::from_weights(vertices, |s, d| {
        let (src, dst) = (simples[s], simples[d]);
        let closed = ext_simple_closed(n, src, dst, 1)?;
        if verify && src.can_be_source() && dst.can_be_target() {
            let oracle = ext1_hemi_nhat(n, src, dst)?;
            if oracle != closed {
                return Err(Error::Verification(format!(
                    "Ext^1({src}, {dst}) over V{n} ⋊ sl2: closed form {closed}, N̂ oracle {oracle}"
                )));
            }
        }
        Ok(closed)
    })?;
    q.max_weight = Some(max_weight);
    Ok(q)
}
