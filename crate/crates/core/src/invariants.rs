//! Closed-form homological invariants of linearly joined arrangements:
//! depth, regularity, connectedness dimension, cohomological dimension,
//! arithmetical rank, Cohen-Macaulay criteria, and extensions by fresh
//! variable blocks.

use crate::arrangement::{Arrangement, Component};
use crate::decomp::LJDecomposition;
use crate::exactlin::{LinForm, LinearSpace};
use crate::tableau::Tableau;
use serde::Serialize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InvError {
    #[error("component `{0}` needs metadata ({1}) for this invariant")]
    MissingMetadata(String, &'static str),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub depth: i64,
    pub reg: i64,
    pub projdim: i64,
    pub ara: i64,
    pub cd: i64,
    /// c(S/I): connectedness dimension of the affine cone.
    pub conn_dim_affine: i64,
    /// c(V): connectedness dimension of the projective variety.
    pub conn_dim_proj: i64,
    pub assumptions: Vec<String>,
}

/// depth of S/Q for the linear parts alone:
/// min over i of the projective dimension of L_{i+1} cap span(L_1..L_i),
/// plus 2 (empty intersection counts as -1); for l = 1 the codimension
/// formula n - dim Q_1.
pub fn depth_linear(arr: &Arrangement, dec: &LJDecomposition) -> i64 {
    let n = arr.n_vars() as i64;
    if arr.len() == 1 {
        return n - arr.components[0].linear_part.dim() as i64;
    }
    (0..arr.len() - 1)
        .map(|i| {
            let t = arr.components[i + 1].linear_part.sum(&dec.d[i]).unwrap();
            n - t.dim() as i64 - 1
        })
        .min()
        .unwrap()
        + 2
}

fn component_depth(arr: &Arrangement, c: &Component) -> Result<i64, InvError> {
    if c.is_linear() {
        return Ok(arr.n_vars() as i64 - c.linear_part.dim() as i64);
    }
    if let Some(d) = c.meta.depth {
        return Ok(d);
    }
    if c.meta.is_cm == Some(true) {
        if let Some(d) = c.meta.dim {
            return Ok(d);
        }
    }
    Err(InvError::MissingMetadata(c.name.clone(), "depth or is_CM+dim"))
}

fn component_dim(arr: &Arrangement, c: &Component) -> Result<i64, InvError> {
    if c.is_linear() {
        return Ok(arr.n_vars() as i64 - c.linear_part.dim() as i64);
    }
    c.meta
        .dim
        .ok_or_else(|| InvError::MissingMetadata(c.name.clone(), "dim"))
}

fn component_reg(c: &Component) -> Result<i64, InvError> {
    if c.is_linear() {
        return Ok(1);
    }
    c.meta
        .reg
        .ok_or_else(|| InvError::MissingMetadata(c.name.clone(), "reg"))
}

/// (depth S/J, reg J) by the depth and regularity theorems.
pub fn depth_reg(arr: &Arrangement, dec: &LJDecomposition) -> Result<(i64, i64), InvError> {
    let dq = depth_linear(arr, dec);
    let mut depth = dq;
    for c in &arr.components {
        depth = depth.min(component_depth(arr, c)?);
    }
    let reg = if arr.len() == 1 {
        component_reg(&arr.components[0])?
    } else {
        let mut r = 2;
        for c in &arr.components {
            r = r.max(component_reg(c)?);
        }
        r
    };
    Ok((depth, reg))
}

/// (c(V), c(S/I), cd): connectedness dimensions and the cohomological
/// dimension max(dim P_i + dim D_{i-1}) - 1.
pub fn conn_and_cd(arr: &Arrangement, dec: &LJDecomposition) -> (i64, i64, i64) {
    let l = arr.len();
    let depth = depth_linear(arr, dec);
    let conn_affine = depth - 1;
    let conn_proj = conn_affine - 1;
    let cd = if l == 1 {
        arr.components[0].linear_part.dim() as i64
    } else {
        (2..=l)
            .map(|i| (dec.p[i - 1].dim() + dec.d[i - 2].dim()) as i64)
            .max()
            .unwrap()
            - 1
    };
    (conn_proj, conn_affine, cd)
}

/// ara of the linear arrangement's ideal: line count of the tableau plus
/// dim D_tail, checked against n - depth and cd.
pub fn ara_linear(
    arr: &Arrangement,
    dec: &LJDecomposition,
    tab: &Tableau,
) -> Result<i64, InvError> {
    assert!(arr.is_linear_only(), "ara formula needs a linear-only arrangement");
    let ara = tab.line_count() as i64 + dec.d_tail.dim() as i64;
    let by_depth = arr.n_vars() as i64 - depth_linear(arr, dec);
    let (_, _, cd) = conn_and_cd(arr, dec);
    if ara != by_depth || ara != cd {
        return Err(InvError::InternalInconsistency(format!(
            "ara disagreement: tableau {ara}, n - depth {by_depth}, cd {cd}"
        )));
    }
    Ok(ara)
}

/// Full invariant report; the tableau is only needed (and only meaningful)
/// for linear-only arrangements.
pub fn invariant_report(
    arr: &Arrangement,
    dec: &LJDecomposition,
    tab: Option<&Tableau>,
) -> Result<InvariantReport, InvError> {
    let (depth, reg) = depth_reg(arr, dec)?;
    let (conn_proj, conn_affine, cd) = conn_and_cd(arr, dec);
    let projdim = arr.n_vars() as i64 - depth;
    let mut assumptions = Vec::new();
    let ara = if arr.is_linear_only() {
        match tab {
            Some(t) => ara_linear(arr, dec, t)?,
            None => projdim,
        }
    } else {
        assumptions.push(
            "cd/ara formulas assume every component is a set-theoretic complete intersection"
                .to_string(),
        );
        cd
    };
    if arr.len() == 1 {
        assumptions.push(
            "l = 1: connectedness dimension reported as depth - 1 by continuity".to_string(),
        );
    }
    if !arr.is_linear_only() {
        if arr.components.iter().all(|c| c.is_linear() || c.meta.is_cm == Some(true)) {
            assumptions
                .push("depth formula used Cohen-Macaulay metadata for components".to_string());
        } else {
            assumptions.push(
                "connectedness formula c = depth - 1 assumes Cohen-Macaulay components"
                    .to_string(),
            );
        }
    }
    Ok(InvariantReport {
        depth,
        reg,
        projdim,
        ara,
        cd,
        conn_dim_affine: conn_affine,
        conn_dim_proj: conn_proj,
        assumptions,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CmVerdict {
    pub is_cm: bool,
    pub dim: i64,
    pub depth: i64,
    /// The chain criterion applies: components all Cohen-Macaulay of one
    /// dimension d, every stepwise sum Cohen-Macaulay of dimension d - 1.
    pub chain_applicable: bool,
    pub notes: Vec<String>,
}

/// Cohen-Macaulayness of S/(J_1 cap ... cap J_l) via the intersection
/// corollary: the chain criterion when applicable, otherwise the
/// depth-versus-dimension comparison.
pub fn cm_check(arr: &Arrangement, dec: &LJDecomposition) -> Result<CmVerdict, InvError> {
    let n = arr.n_vars() as i64;
    let mut notes = Vec::new();
    let dims = arr
        .components
        .iter()
        .map(|c| component_dim(arr, c))
        .collect::<Result<Vec<_>, _>>()?;
    let dim = *dims.iter().max().unwrap();
    let (depth, _) = depth_reg(arr, dec)?;

    let all_cm = arr
        .components
        .iter()
        .all(|c| c.is_linear() || c.meta.is_cm == Some(true));
    let same_dim = dims.iter().all(|&d| d == dim);
    let mut chain_applicable = all_cm && same_dim;
    if !all_cm {
        notes.push("some component is not known to be Cohen-Macaulay".to_string());
    }
    if !same_dim {
        notes.push(format!(
            "components have different dimensions {dims:?}; chain criterion inapplicable"
        ));
    }
    if chain_applicable {
        for i in 1..arr.len() {
            // The stepwise sum J_{i+1} + (J_1 cap .. cap J_i) is the linear
            // ideal Q_{i+1} + D_i by condition (*): a polynomial ring, hence
            // Cohen-Macaulay; only its dimension needs checking.
            let s = arr.components[i].linear_part.sum(&dec.d[i - 1]).unwrap();
            let sdim = n - s.dim() as i64;
            if sdim != dim - 1 {
                chain_applicable = false;
                notes.push(format!(
                    "stepwise sum at k = {} has dimension {sdim}, expected {}",
                    i + 1,
                    dim - 1
                ));
                break;
            }
        }
    }
    let is_cm = if chain_applicable {
        true
    } else {
        depth == dim
    };
    if !is_cm {
        notes.push(format!("depth {depth} < dim {dim}"));
    }
    Ok(CmVerdict {
        is_cm,
        dim,
        depth,
        chain_applicable,
        notes,
    })
}

/// Adjoin fresh variable blocks F_1..F_l: the extended component i gets
/// Q_i (+) (direct sum of F_j for j != i).  The extension stays linearly
/// joined with the same stepwise intersections, so depth is preserved.
pub fn extend_arrangement(arr: &Arrangement, block_sizes: &[usize]) -> Arrangement {
    assert_eq!(block_sizes.len(), arr.len(), "one block size per component");
    let mut vars = arr.vars.clone();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(arr.len());
    for (i, &size) in block_sizes.iter().enumerate() {
        let mut block = Vec::with_capacity(size);
        for k in 0..size {
            let mut name = format!("w{}_{}", i + 1, k + 1);
            while vars.contains(&name) {
                name.push('_');
            }
            block.push(vars.len());
            vars.push(name);
        }
        blocks.push(block);
    }
    let n = vars.len();
    let components = arr
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut forms: Vec<LinForm> = c
                .linear_part
                .basis
                .iter()
                .map(|f| {
                    let mut coeffs = f.coeffs.clone();
                    coeffs.resize(n, crate::Rat::from_integer(0.into()));
                    LinForm { coeffs }
                })
                .collect();
            for (j, block) in blocks.iter().enumerate() {
                if j == i {
                    continue;
                }
                for &v in block {
                    forms.push(LinForm::var(n, v));
                }
            }
            Component {
                name: c.name.clone(),
                linear_part: LinearSpace::span(&vars, &forms),
                extra_gens: c
                    .extra_gens
                    .iter()
                    .map(|g| extend_poly(g, &vars))
                    .collect(),
                meta: c.meta.clone(),
            }
        })
        .collect();
    Arrangement { vars, components }
}

fn extend_poly(p: &crate::Poly, vars: &[String]) -> crate::Poly {
    let mut out = crate::Poly::zero(vars);
    for (e, c) in &p.terms {
        let mut exps = e.clone();
        exps.resize(vars.len(), 0);
        out.terms.insert(exps, c.clone());
    }
    out
}
