//! Square-free monomial frontend: Stanley-Reisner complexes, Froberg
//! recognition of 2-linear ideals, linearly joined facet orders, Ferrer
//! ideals, and simplicial-ideal constructions with arithmetical-rank
//! bookkeeping.

use crate::arrangement::{Arrangement, Component, ComponentMeta};
use crate::exactlin::{LinearSpace, LinForm};
use crate::{Poly, Rat};
use num_traits::One;
use std::collections::BTreeSet;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MonoError {
    #[error("syntax error in monomial input: {0}")]
    Syntax(String),
    #[error("generator `{0}` is not square-free")]
    NotSquarefree(String),
    #[error("facet {0:?} is contained in facet {1:?}")]
    FacetInclusion(Vec<String>, Vec<String>),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("fresh vertex `{0}` collides with an existing vertex")]
    OverlappingFresh(String),
    #[error("part `{part}`: generator `{gen}` has support outside its vertex set")]
    SupportOutsidePart { part: String, gen: String },
    #[error("metadata vectors must have one entry per facet")]
    BadMetadata,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// A simplicial complex given by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplexModel {
    pub vertices: Vec<String>,
    /// Sorted vertex-index lists, pairwise inclusion-free.
    pub facets: Vec<Vec<usize>>,
}

/// Minimal hitting sets of `sets` (Berge's algorithm).  Returns the empty
/// list when some set is empty (nothing can hit it) and `[[]]` when there
/// are no sets.
pub fn minimal_transversals(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut current: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for s in sets {
        if s.is_empty() {
            return Vec::new();
        }
        let mut next: Vec<BTreeSet<usize>> = Vec::new();
        for h in &current {
            if s.iter().any(|v| h.contains(v)) {
                next.push(h.clone());
            } else {
                for &v in s {
                    let mut e = h.clone();
                    e.insert(v);
                    next.push(e);
                }
            }
        }
        // keep only inclusion-minimal sets
        next.sort_by_key(|h| h.len());
        let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
        for h in next {
            if !minimal.iter().any(|m| m.is_subset(&h)) {
                minimal.push(h);
            }
        }
        current = minimal;
    }
    let mut out: Vec<Vec<usize>> = current
        .into_iter()
        .map(|h| h.into_iter().collect())
        .collect();
    out.sort();
    out
}

/// Maximal cliques of the graph with adjacency bitmasks `adj`
/// (Bron-Kerbosch with pivoting; deterministic output order).
pub fn maximal_cliques(n: usize, adj: &[u32]) -> Vec<Vec<usize>> {
    fn bk(r: u32, mut p: u32, mut x: u32, adj: &[u32], out: &mut Vec<u32>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let bit = 1u32 << v;
            bk(r | bit, p & adj[v], x & adj[v], adj, out);
            p &= !bit;
            x |= bit;
            cand &= !bit;
        }
    }
    let mut masks = Vec::new();
    bk(0, (1u32 << n) - 1, 0, adj, &mut masks);
    let mut out: Vec<Vec<usize>> = masks
        .into_iter()
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

impl SimplicialComplexModel {
    pub fn new(vertices: Vec<String>, mut facets: Vec<Vec<usize>>) -> Result<Self, MonoError> {
        for f in &mut facets {
            f.sort_unstable();
            f.dedup();
        }
        facets.sort();
        facets.dedup();
        for (i, f) in facets.iter().enumerate() {
            for (j, g) in facets.iter().enumerate() {
                if i != j && f.iter().all(|v| g.contains(v)) {
                    let name = |s: &[usize]| s.iter().map(|&v| vertices[v].clone()).collect();
                    return Err(MonoError::FacetInclusion(name(f), name(g)));
                }
            }
        }
        Ok(SimplicialComplexModel { vertices, facets })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_face(&self, set: &[usize]) -> bool {
        self.facets
            .iter()
            .any(|f| set.iter().all(|v| f.contains(v)))
    }

    /// Adjacency bitmasks of the 1-skeleton G(Delta).
    pub fn skeleton(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n_vertices()];
        for f in &self.facets {
            for (a, &u) in f.iter().enumerate() {
                for &v in &f[a + 1..] {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
        }
        adj
    }

    /// Minimal non-faces = minimal generators of the Stanley-Reisner ideal,
    /// via minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let complements: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| (0..n).filter(|v| !f.contains(v)).collect())
            .collect();
        minimal_transversals(&complements)
    }

    /// Build the complex whose ideal is generated by the given square-free
    /// monomials (vertex-index sets): facets = complements of the minimal
    /// vertex covers of the generator supports.
    pub fn from_generators(vertices: Vec<String>, gens: &[Vec<usize>]) -> Result<Self, MonoError> {
        let n = vertices.len();
        let covers = minimal_transversals(gens);
        let facets: Vec<Vec<usize>> = covers
            .iter()
            .map(|c| (0..n).filter(|v| !c.contains(v)).collect())
            .collect();
        Self::new(vertices, facets)
    }

    /// Clique complex of a graph given by its edges.
    pub fn from_graph(vertices: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let n = vertices.len();
        let mut adj = vec![0u32; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let facets = maximal_cliques(n, &adj);
        SimplicialComplexModel { vertices, facets }
    }
}

/// Parse either a whitespace-separated square-free monomial list
/// (`fd ad fe` or `x1*x3 x2*x4`) or a facet list (`facets: {a,b,c} {b,d}`).
pub fn parse_squarefree(input: &str) -> Result<SimplicialComplexModel, MonoError> {
    let input = input.trim();
    if let Some(rest) = input.strip_suffix(';').unwrap_or(input).strip_prefix("facets:") {
        let mut facet_names: Vec<Vec<String>> = Vec::new();
        for chunk in rest.split('{').skip(1) {
            let Some(body) = chunk.split('}').next().filter(|_| chunk.contains('}')) else {
                return Err(MonoError::Syntax("unclosed `{`".into()));
            };
            let names: Vec<String> = body
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            facet_names.push(names);
        }
        let vertices: Vec<String> = facet_names
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let facets = facet_names
            .iter()
            .map(|f| {
                f.iter()
                    .map(|v| vertices.iter().position(|w| w == v).unwrap())
                    .collect()
            })
            .collect();
        return SimplicialComplexModel::new(vertices, facets);
    }

    // monomial list, with an optional explicit vertex list for vertices
    // that appear in no generator (cone vertices)
    let (declared, body) = match input.strip_prefix("vars:") {
        Some(rest) => {
            let Some((head, tail)) = rest.split_once(';') else {
                return Err(MonoError::Syntax("`vars:` needs a terminating `;`".into()));
            };
            (
                head.split_whitespace().map(|s| s.to_string()).collect(),
                tail,
            )
        }
        None => (Vec::new(), input),
    };
    let words: Vec<&str> = body.split_whitespace().collect();
    let split_word = |w: &str| -> Vec<String> {
        if w.contains('*') {
            w.split('*').map(|s| s.to_string()).collect()
        } else {
            w.chars().map(|c| c.to_string()).collect()
        }
    };
    let vertices: Vec<String> = words
        .iter()
        .flat_map(|w| split_word(w))
        .chain(declared.iter().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if !declared.is_empty() {
        for w in &words {
            for name in split_word(w) {
                if !declared.contains(&name) {
                    return Err(MonoError::UnknownVertex(name));
                }
            }
        }
    }
    let mut gens = Vec::new();
    for w in &words {
        let mut g: Vec<usize> = Vec::new();
        for name in split_word(w) {
            let i = vertices.iter().position(|v| *v == name).unwrap();
            if g.contains(&i) {
                return Err(MonoError::NotSquarefree(w.to_string()));
            }
            g.push(i);
        }
        g.sort_unstable();
        gens.push(g);
    }
    SimplicialComplexModel::from_generators(vertices, &gens)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelData {
    /// Vertices in the order they were peeled.
    pub order: Vec<usize>,
    /// For each peel, the clique neighborhood it was glued along.
    pub glue: Vec<Vec<usize>>,
    /// The complete graph the peel terminated on.
    pub base_clique: Vec<usize>,
    /// Dimension of the complex (base clique size - 1).
    pub d: usize,
    /// Every peel glued along exactly d vertices (first Froberg theorem:
    /// Cohen-Macaulay of minimal degree).
    pub is_d_tree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Accept(PeelData),
    Reject(String),
}

/// Froberg's criterion for a 2-linear resolution: the complex is flag
/// (facets = maximal cliques of its skeleton) and its skeleton is a
/// generalized tree.  Peeling takes the lexicographically smallest
/// extremal vertex first; empty clique neighborhoods are allowed, so
/// disconnected generalized forests are accepted (the equivalence with
/// reg(S/I) <= 1 requires this).
pub fn recognize_two_linear(cx: &SimplicialComplexModel) -> Recognition {
    let n = cx.n_vertices();
    let adj = cx.skeleton();

    // flagness
    let cliques = maximal_cliques(n, &adj);
    let mut facets = cx.facets.clone();
    facets.sort();
    if cliques != facets {
        for c in &cliques {
            if !cx.is_face(c) {
                let names: Vec<&str> = c.iter().map(|&v| cx.vertices[v].as_str()).collect();
                return Recognition::Reject(format!(
                    "not flag: clique {{{}}} is not a face",
                    names.join(",")
                ));
            }
        }
        return Recognition::Reject("not flag: facets differ from maximal cliques".into());
    }

    // generalized-tree peel
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut order = Vec::new();
    let mut glue: Vec<Vec<usize>> = Vec::new();
    loop {
        let complete = remaining.iter().enumerate().all(|(a, &u)| {
            remaining[a + 1..].iter().all(|&v| adj[u] >> v & 1 == 1)
        });
        if complete {
            break;
        }
        let lex: Vec<usize> = {
            let mut r = remaining.clone();
            r.sort_by(|&a, &b| cx.vertices[a].cmp(&cx.vertices[b]));
            r
        };
        let extremal = lex.iter().copied().find(|&v| {
            let nb: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&u| u != v && adj[v] >> u & 1 == 1)
                .collect();
            nb.iter()
                .enumerate()
                .all(|(a, &u)| nb[a + 1..].iter().all(|&w| adj[u] >> w & 1 == 1))
        });
        let Some(v) = extremal else {
            let names: Vec<&str> = remaining.iter().map(|&u| cx.vertices[u].as_str()).collect();
            return Recognition::Reject(format!(
                "no extremal vertex among {{{}}}",
                names.join(",")
            ));
        };
        order.push(v);
        glue.push(
            remaining
                .iter()
                .copied()
                .filter(|&u| u != v && adj[v] >> u & 1 == 1)
                .collect(),
        );
        remaining.retain(|&u| u != v);
    }
    let d = remaining.len().saturating_sub(1);
    let is_d_tree = glue.iter().all(|g| g.len() == d);
    Recognition::Accept(PeelData {
        order,
        glue,
        base_clique: remaining,
        d,
        is_d_tree,
    })
}

fn coordinate_component(vars: &[String], facet: &[usize], name: String) -> Component {
    let n = vars.len();
    let forms: Vec<LinForm> = (0..n)
        .filter(|v| !facet.contains(v))
        .map(|v| LinForm::var(n, v))
        .collect();
    Component {
        name,
        linear_part: LinearSpace::span(vars, &forms),
        extra_gens: Vec::new(),
        meta: ComponentMeta::default(),
    }
}

/// Order the facets by the running-intersection condition
/// G_k cap (G_1 u ... u G_{k-1}) subset G_j, seeded by the reverse peel,
/// and emit the coordinate-subspace arrangement (Q_j = variables not in
/// facet j).  Returns the arrangement and the facet permutation used.
pub fn facet_order_to_arrangement(
    cx: &SimplicialComplexModel,
    peel: &PeelData,
) -> Result<(Arrangement, Vec<usize>), MonoError> {
    let s = cx.facets.len();
    // Heuristic priority: facets made of late-peel (base) vertices first.
    let mut peel_rank = vec![0usize; cx.n_vertices()];
    for (i, &v) in peel.order.iter().enumerate() {
        peel_rank[v] = peel.order.len() - i;
    }
    let mut candidates: Vec<usize> = (0..s).collect();
    candidates.sort_by_key(|&f| {
        (
            cx.facets[f].iter().map(|&v| peel_rank[v]).max().unwrap_or(0),
            f,
        )
    });

    fn extend(
        cx: &SimplicialComplexModel,
        candidates: &[usize],
        chosen: &mut Vec<usize>,
        union: &mut BTreeSet<usize>,
    ) -> bool {
        if chosen.len() == candidates.len() {
            return true;
        }
        for &f in candidates {
            if chosen.contains(&f) {
                continue;
            }
            let inter: Vec<usize> = cx.facets[f]
                .iter()
                .copied()
                .filter(|v| union.contains(v))
                .collect();
            let ok = chosen.is_empty()
                || chosen
                    .iter()
                    .any(|&j| inter.iter().all(|v| cx.facets[j].contains(v)));
            if !ok {
                continue;
            }
            let added: Vec<usize> = cx.facets[f]
                .iter()
                .copied()
                .filter(|v| !union.contains(v))
                .collect();
            chosen.push(f);
            union.extend(added.iter().copied());
            if extend(cx, candidates, chosen, union) {
                return true;
            }
            chosen.pop();
            for v in added {
                union.remove(&v);
            }
        }
        false
    }

    let mut chosen = Vec::new();
    let mut union = BTreeSet::new();
    if !extend(cx, &candidates, &mut chosen, &mut union) {
        return Err(MonoError::InternalInconsistency(
            "no running-intersection facet order exists".into(),
        ));
    }
    let components = chosen
        .iter()
        .map(|&f| coordinate_component(&cx.vertices, &cx.facets[f], format!("F{}", f + 1)))
        .collect();
    let arr = Arrangement {
        vars: cx.vertices.clone(),
        components,
    };
    if !arr.check_order().ok {
        return Err(MonoError::InternalInconsistency(
            "derived facet order fails the linearly joined check".into(),
        ));
    }
    Ok((arr, chosen))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrerShape {
    /// Weakly decreasing positive parts.
    pub lambda: Vec<usize>,
}

impl FerrerShape {
    pub fn new(lambda: Vec<usize>) -> Result<Self, MonoError> {
        if lambda.is_empty()
            || lambda.windows(2).any(|w| w[0] < w[1])
            || *lambda.last().unwrap() == 0
        {
            return Err(MonoError::Syntax(
                "partition must be weakly decreasing and positive".into(),
            ));
        }
        Ok(FerrerShape { lambda })
    }

    pub fn parse(input: &str) -> Result<Self, MonoError> {
        let input = input.trim();
        let body = input.strip_prefix("lambda:").unwrap_or(input);
        let lambda = body
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| MonoError::Syntax(format!("bad part `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(lambda)
    }
}

#[derive(Debug, Clone)]
pub struct FerrerReport {
    pub vars: Vec<String>,
    /// The diagram monomials x_i y_j, j <= lambda_i.
    pub gens: Vec<Poly>,
    pub arrangement: Arrangement,
    pub projdim: i64,
    pub ara: i64,
    pub cd: i64,
    /// c(S/I_lambda).
    pub conn: i64,
}

/// Build the Ferrer ideal of a partition together with its linearly joined
/// component decomposition and the closed-form invariants
/// projdim = max(lambda_i + i - 1), ara = cd = projdim,
/// c = min((lambda_1 - lambda_i) + (m - i)).
pub fn ferrer(shape: &FerrerShape) -> FerrerReport {
    let lambda = &shape.lambda;
    let m = lambda.len();
    let n = lambda[0];
    let mut vars: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    vars.extend((1..=n).map(|j| format!("y{j}")));

    let gens: Vec<Poly> = (0..m)
        .flat_map(|i| {
            let vars = vars.clone();
            (0..lambda[i]).map(move |j| {
                Poly::monomial(
                    &vars,
                    {
                        let mut e = vec![0u32; m + n];
                        e[i] = 1;
                        e[m + j] = 1;
                        e
                    },
                    Rat::one(),
                )
            })
        })
        .collect();

    // Distinct values ascending: v_1 < ... < v_{l-1}; l components.
    let mut vals: Vec<usize> = lambda.clone();
    vals.sort_unstable();
    vals.dedup();
    let l = vals.len() + 1;
    // Delta_k (k = 2..=l): the x-rows with lambda = vals[k-2];
    // P_k: y_1..y_{vals[k-2]}; D_k: union of Delta_i for i > k.
    let delta_rows = |k: usize| -> Vec<usize> {
        (0..m).filter(|&i| lambda[i] == vals[k - 2]).collect()
    };
    let components = (1..=l)
        .map(|k| {
            let nv = m + n;
            let mut forms: Vec<LinForm> = Vec::new();
            if k >= 2 {
                for j in 0..vals[k - 2] {
                    forms.push(LinForm::var(nv, m + j));
                }
            }
            for i in k + 1..=l {
                for r in delta_rows(i) {
                    forms.push(LinForm::var(nv, r));
                }
            }
            Component {
                name: format!("C{k}"),
                linear_part: LinearSpace::span(&vars, &forms),
                extra_gens: Vec::new(),
                meta: ComponentMeta::default(),
            }
        })
        .collect();
    let arrangement = Arrangement {
        vars: vars.clone(),
        components,
    };

    let projdim = (0..m).map(|i| (lambda[i] + i) as i64).max().unwrap();
    let conn = (0..m)
        .map(|i| (lambda[0] - lambda[i] + (m - 1 - i)) as i64)
        .min()
        .unwrap();
    FerrerReport {
        vars,
        gens,
        arrangement,
        projdim,
        ara: projdim,
        cd: projdim,
        conn,
    }
}

/// Extend a complex by pairwise-disjoint fresh vertex sets, one per facet:
/// facet i becomes G_i = F_i u F'_i.  Returns the extended complex and the
/// new degree-2 generators yz (y in F'_i, z in G_j \ F_i, i != j).
pub fn extend_complex(
    base: &SimplicialComplexModel,
    fresh: &[Vec<String>],
) -> Result<(SimplicialComplexModel, Vec<Poly>), MonoError> {
    if fresh.len() != base.facets.len() {
        return Err(MonoError::BadMetadata);
    }
    let mut vertices = base.vertices.clone();
    let mut fresh_idx: Vec<Vec<usize>> = Vec::new();
    for block in fresh {
        let mut idx = Vec::new();
        for name in block {
            if vertices.contains(name) {
                return Err(MonoError::OverlappingFresh(name.clone()));
            }
            idx.push(vertices.len());
            vertices.push(name.clone());
        }
        fresh_idx.push(idx);
    }
    let facets: Vec<Vec<usize>> = base
        .facets
        .iter()
        .zip(&fresh_idx)
        .map(|(f, extra)| {
            let mut g = f.clone();
            g.extend(extra.iter().copied());
            g.sort_unstable();
            g
        })
        .collect();
    let ext = SimplicialComplexModel::new(vertices.clone(), facets.clone())?;

    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, block) in fresh_idx.iter().enumerate() {
        for &y in block {
            for (j, g) in facets.iter().enumerate() {
                if i == j {
                    continue;
                }
                for &z in g {
                    if !base.facets[i].contains(&z) && z != y {
                        pairs.insert((y.min(z), y.max(z)));
                    }
                }
            }
        }
    }
    let delta = pairs
        .into_iter()
        .map(|(a, b)| {
            let mut e = vec![0u32; vertices.len()];
            e[a] = 1;
            e[b] = 1;
            Poly::monomial(&vertices, e, Rat::one())
        })
        .collect();
    Ok((ext, delta))
}

/// One part of a simplicial-ideal specification: a vertex subset G_i and a
/// generator list L_i inside (G_i)^2.
#[derive(Debug, Clone)]
pub struct SimplicialPart {
    pub name: String,
    pub vertices: Vec<usize>,
    pub gens: Vec<Poly>,
    pub meta: ComponentMeta,
}

#[derive(Debug, Clone)]
pub struct SimplicialIdealSpec {
    pub vars: Vec<String>,
    pub parts: Vec<SimplicialPart>,
}

impl SimplicialIdealSpec {
    /// JSON layout:
    /// `{"vars": [...], "parts": [{"name": "...", "vertices": [...],
    ///   "gens": ["b*y2 - y1^2", ...], "meta": {"dim": 3, ...}}]}`.
    pub fn parse_json(input: &str) -> Result<SimplicialIdealSpec, MonoError> {
        let v: serde_json::Value =
            serde_json::from_str(input).map_err(|e| MonoError::Syntax(e.to_string()))?;
        let syntax = |msg: &str| MonoError::Syntax(msg.to_string());
        let vars: Vec<String> = v["vars"]
            .as_array()
            .ok_or_else(|| syntax("`vars` must be an array"))?
            .iter()
            .map(|s| s.as_str().map(|s| s.to_string()))
            .collect::<Option<_>>()
            .ok_or_else(|| syntax("`vars` entries must be strings"))?;
        let mut parts = Vec::new();
        for (i, p) in v["parts"]
            .as_array()
            .ok_or_else(|| syntax("`parts` must be an array"))?
            .iter()
            .enumerate()
        {
            let name = p["name"]
                .as_str()
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("P{}", i + 1));
            let vertices = p["vertices"]
                .as_array()
                .ok_or_else(|| syntax("`vertices` must be an array"))?
                .iter()
                .map(|s| {
                    let name = s.as_str().ok_or_else(|| syntax("vertex must be a string"))?;
                    vars.iter()
                        .position(|w| w == name)
                        .ok_or_else(|| MonoError::UnknownVertex(name.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let gens = p["gens"]
                .as_array()
                .map(|a| a.as_slice())
                .unwrap_or_default()
                .iter()
                .map(|s| {
                    let src = s.as_str().ok_or_else(|| syntax("generator must be a string"))?;
                    Poly::parse(&vars, src).map_err(|e| MonoError::Syntax(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let meta = ComponentMeta {
                depth: p["meta"]["depth"].as_i64(),
                reg: p["meta"]["reg"].as_i64(),
                dim: p["meta"]["dim"].as_i64(),
                deg: p["meta"]["deg"].as_i64(),
                is_cm: p["meta"]["is_cm"].as_bool(),
                is_stci: p["meta"]["is_stci"].as_bool(),
            };
            parts.push(SimplicialPart {
                name,
                vertices,
                gens,
                meta,
            });
        }
        Ok(SimplicialIdealSpec { vars, parts })
    }
}

#[derive(Debug, Clone)]
pub struct SimplicialReport {
    /// The claimed decomposition: component j has linear part (G \ G_j) and
    /// extra generators I_j.
    pub arrangement: Arrangement,
    /// Minimal generators of the monomial intersection cap_j (G \ G_j).
    pub transversal: Vec<Vec<usize>>,
    /// Generators of I_G (deduplicated).
    pub i_g: Vec<Poly>,
    /// l_ij[i][j] = indices into part i's generator list forming L_{i,j};
    /// the diagonal holds L_i \ union of the other L_j.
    pub l_ij: Vec<Vec<Vec<usize>>>,
    pub hypothesis_ok: bool,
    pub hypothesis_violations: Vec<String>,
    pub dim: Option<i64>,
    pub deg: Option<i64>,
}

/// Assemble P_G = (I_G, cap_j (G \ G_j)) and its claimed prime
/// decomposition cap_j (I_j, G \ G_j), checking the containment hypothesis
/// I_{k,l} subset (G \ G_j) for j not in {k, l}.  Primality of the I_j is
/// not verified (metadata-driven).
pub fn simplicial_ideal(spec: &SimplicialIdealSpec) -> Result<SimplicialReport, MonoError> {
    let n = spec.vars.len();
    let s = spec.parts.len();
    for part in &spec.parts {
        for g in &part.gens {
            let ok = g.terms.keys().all(|e| {
                (0..n).all(|v| e[v] == 0 || part.vertices.contains(&v))
            });
            if !ok {
                return Err(MonoError::SupportOutsidePart {
                    part: part.name.clone(),
                    gen: g.to_string(),
                });
            }
        }
    }
    let complement = |i: usize| -> Vec<usize> {
        (0..n).filter(|v| !spec.parts[i].vertices.contains(v)).collect()
    };

    // L_{i,j} = generators of L_i lying in the variable ideal (G_i cap G_j);
    // L_{i,i} = L_i minus every other part's generator list.
    let mut l_ij: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); s]; s];
    for i in 0..s {
        for j in 0..s {
            if i == j {
                l_ij[i][i] = spec.parts[i]
                    .gens
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| {
                        !spec
                            .parts
                            .iter()
                            .enumerate()
                            .any(|(k, p)| k != i && p.gens.contains(g))
                    })
                    .map(|(idx, _)| idx)
                    .collect();
            } else {
                let gij: Vec<usize> = spec.parts[i]
                    .vertices
                    .iter()
                    .copied()
                    .filter(|v| spec.parts[j].vertices.contains(v))
                    .collect();
                l_ij[i][j] = spec.parts[i]
                    .gens
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| g.in_variable_ideal(&gij))
                    .map(|(idx, _)| idx)
                    .collect();
            }
        }
    }

    // I_i = sum_j I_{i,j}; I_G = sum_i I_i.
    let part_ideal = |i: usize| -> Vec<Poly> {
        let mut gens: Vec<Poly> = Vec::new();
        for j in 0..s {
            for &idx in &l_ij[i][j] {
                let g = &spec.parts[i].gens[idx];
                if !gens.contains(g) {
                    gens.push(g.clone());
                }
            }
        }
        gens
    };
    let mut i_g: Vec<Poly> = Vec::new();
    for i in 0..s {
        for g in part_ideal(i) {
            if !i_g.contains(&g) {
                i_g.push(g);
            }
        }
    }

    let transversal = minimal_transversals(&(0..s).map(complement).collect::<Vec<_>>());

    // Hypothesis: I_{k,l} subset (G \ G_j) for j != k, l.
    let mut violations = Vec::new();
    for k in 0..s {
        for l in 0..s {
            for j in 0..s {
                if j == k || j == l {
                    continue;
                }
                let comp_j = complement(j);
                for &idx in &l_ij[k][l] {
                    let g = &spec.parts[k].gens[idx];
                    if !g.in_variable_ideal(&comp_j) {
                        violations.push(format!(
                            "generator `{g}` of L_{{{},{}}} is not in (G \\ G_{})",
                            k + 1,
                            l + 1,
                            j + 1
                        ));
                    }
                }
            }
        }
    }

    let components = (0..s)
        .map(|i| {
            let forms: Vec<LinForm> = complement(i)
                .iter()
                .map(|&v| LinForm::var(n, v))
                .collect();
            Component {
                name: spec.parts[i].name.clone(),
                linear_part: LinearSpace::span(&spec.vars, &forms),
                extra_gens: part_ideal(i),
                meta: spec.parts[i].meta.clone(),
            }
        })
        .collect();
    let arrangement = Arrangement {
        vars: spec.vars.clone(),
        components,
    };

    let dims: Option<Vec<i64>> = spec.parts.iter().map(|p| p.meta.dim).collect();
    let dim = dims.as_ref().map(|d| *d.iter().max().unwrap());
    let deg = dims.and_then(|d| {
        let top = *d.iter().max().unwrap();
        spec.parts
            .iter()
            .zip(&d)
            .filter(|(_, &pd)| pd == top)
            .map(|(p, _)| p.meta.deg)
            .sum::<Option<i64>>()
    });

    Ok(SimplicialReport {
        arrangement,
        transversal,
        i_g,
        l_ij,
        hypothesis_ok: violations.is_empty(),
        hypothesis_violations: violations,
        dim,
        deg,
    })
}

#[derive(Debug, Clone)]
pub struct AraReport {
    pub card_g: i64,
    /// Height of P_G: card G - max card F_i.
    pub ht: i64,
    /// ara of the base Stanley-Reisner ideal (card F - depth), when the
    /// base is recognized as a generalized tree.
    pub ara_base: Option<i64>,
    /// Item 1: ara(P_G) <= sum ara(I_i) + ara(base).
    pub upper_bound: Option<i64>,
    /// Item 2 (generalized tree, all parts stci): (ara = cd, c).
    pub item2: Option<(i64, i64)>,
    /// Set-theoretic complete intersection verdict (item 3, or the squeeze
    /// ht <= ara <= upper bound with equality).
    pub stci: Option<bool>,
    /// Item 4 applies: ara = cd = projdim.
    pub item4: bool,
    pub hypotheses: Vec<String>,
}

/// Arithmetical-rank bookkeeping for a simplicial ideal built over a base
/// complex: base facets F_i carry fresh blocks of size `card_f_prime[i]`
/// and toric parts with known ara / stci / CM metadata.
pub fn simplicial_ara(
    base: &SimplicialComplexModel,
    card_f_prime: &[usize],
    ara_parts: &[i64],
    is_stci: &[bool],
    is_cm: &[bool],
) -> Result<AraReport, MonoError> {
    let s = base.facets.len();
    if card_f_prime.len() != s || ara_parts.len() != s || is_stci.len() != s || is_cm.len() != s {
        return Err(MonoError::BadMetadata);
    }
    let card_f = base.n_vertices() as i64;
    let card_g = card_f + card_f_prime.iter().sum::<usize>() as i64;
    let ht = card_g - base.facets.iter().map(|f| f.len()).max().unwrap_or(0) as i64;

    let mut hypotheses = Vec::new();
    let recog = recognize_two_linear(base);
    let (ara_base, depth_base, d_tree) = match &recog {
        Recognition::Accept(peel) => {
            let (arr, _) = facet_order_to_arrangement(base, peel)?;
            let dec = crate::decomp::decompose(&arr)
                .map_err(|e| MonoError::InternalInconsistency(e.to_string()))?;
            let depth = crate::invariants::depth_linear(&arr, &dec);
            hypotheses.push("base complex is a generalized tree".into());
            if peel.is_d_tree {
                hypotheses.push(format!("base complex is a {}-tree", peel.d));
            }
            (Some(card_f - depth), Some(depth), peel.is_d_tree)
        }
        Recognition::Reject(reason) => {
            hypotheses.push(format!("base not recognized ({reason}); items 2-4 not applicable"));
            (None, None, false)
        }
    };

    let upper_bound = ara_base.map(|ab| ara_parts.iter().sum::<i64>() + ab);
    let all_stci = is_stci.iter().all(|&b| b);
    if all_stci {
        hypotheses.push("every part ideal is a set-theoretic complete intersection".into());
    }
    let item2 = match (depth_base, all_stci) {
        (Some(depth), true) => Some((card_g - depth, depth - 1)),
        _ => None,
    };
    let stci = if d_tree && all_stci {
        hypotheses.push("item 3: d-tree base with stci parts".into());
        Some(true)
    } else if upper_bound == Some(ht) {
        hypotheses.push("squeeze: ht(P_G) = upper bound for ara(P_G)".into());
        Some(true)
    } else {
        None
    };
    let item4 = item2.is_some() && is_cm.iter().all(|&b| b);
    if item4 {
        hypotheses.push("item 4: Cohen-Macaulay parts, ara = cd = projdim".into());
    }
    Ok(AraReport {
        card_g,
        ht,
        ara_base,
        upper_bound,
        item2,
        stci,
        item4,
        hypotheses,
    })
}

/// Built-in square-free sample ideals (k = 1, 2, 3): a nested family of
/// generalized trees on 6, 9, and 10 vertices whose tableaux have 4, 7,
/// and 8 lines.  Used by the self-test and the integration suite.
pub fn sample_complex(k: usize) -> SimplicialComplexModel {
    let base = "fd ad fe de ae fb fa";
    let step2 = "gd ge gb ga gc hd he hb ha hc id ie ib ia ic";
    let step3 = "jd ji jh jg je jb ja jc";
    let input = match k {
        1 => format!("vars: a b c d e f; {base}"),
        2 => format!("vars: a b c d e f g h i; {base} {step2}"),
        3 => format!("vars: a b c d e f g h i j; {base} {step2} {step3}"),
        _ => panic!("sample_complex takes k in 1..=3"),
    };
    parse_squarefree(&input).expect("built-in samples parse")
}
