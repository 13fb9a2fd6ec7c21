//! Arrangements of components J_i = (M_i, (Q_i)): the data model, the input
//! parsers, verification of a linearly joined order, and order search.

use crate::exactlin::LinearSpace;
use crate::poly::Poly;


/// Optional per-component metadata for components with non-linear generators.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComponentMeta {
    pub depth: Option<i64>,
    pub reg: Option<i64>,
    pub dim: Option<i64>,
    pub deg: Option<i64>,
    pub is_cm: Option<bool>,
    pub is_stci: Option<bool>,
}

impl ComponentMeta {
    pub fn is_empty(&self) -> bool {
        *self == ComponentMeta::default()
    }
}

/// One component J = (M, (Q)): a linear part Q and extra generators M.
#[derive(Debug, Clone)]
pub struct Component {
    pub name: String,
    pub linear_part: LinearSpace,
    pub extra_gens: Vec<Poly>,
    pub meta: ComponentMeta,
}

impl Component {
    pub fn is_linear(&self) -> bool {
        self.extra_gens.is_empty()
    }
}

/// Ordered sequence of components in a common ambient polynomial ring.
#[derive(Debug, Clone)]
pub struct Arrangement {
    pub vars: Vec<String>,
    pub components: Vec<Component>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ArrError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("duplicate component name `{0}`")]
    DuplicateName(String),
    #[error("inclusion between linear components `{outer}` and `{inner}` (the zero set of `{inner}` lies inside that of `{outer}`)")]
    Inclusion { outer: String, inner: String },
    #[error("extra generator `{gen}` of component `{comp}` has degree < 2")]
    LowDegreeGen { comp: String, gen: String },
    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("arrangement has {0} components, above the search cap of {1}")]
    TooManyComponents(usize, usize),
}

/// How a positive check_order verdict was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Exact geometric condition (*) for linear-only arrangements.
    Geometric,
    /// Corollary's sufficient axioms: linear parts joined and every extra
    /// generator of M_i lies in (Q_j) for all j != i.
    SufficientAxioms,
}

/// Verdict of check_order, with per-step witnesses on success.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub ok: bool,
    pub mode: CheckMode,
    /// For each k = 2..=l (indexing into components as k-1), the 0-based index
    /// j < k-1 of a component with W_k inside L_{j+1}; None when the step failed.
    pub witnesses: Vec<Option<usize>>,
    /// First violating step, as a 0-based component index.
    pub first_violation: Option<usize>,
    /// Offending extra generator (component name, generator, ideal it misses),
    /// when the sufficient-axiom path failed on the M side.
    pub bad_gen: Option<(String, String, String)>,
}

impl Arrangement {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_linear_only(&self) -> bool {
        self.components.iter().all(Component::is_linear)
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    /// Reject pairwise inclusions between linear-only components.
    pub fn validate(&self) -> Result<(), ArrError> {
        for c in &self.components {
            for g in &c.extra_gens {
                if g.degree().unwrap_or(0) < 2 {
                    return Err(ArrError::LowDegreeGen {
                        comp: c.name.clone(),
                        gen: g.to_string(),
                    });
                }
            }
        }
        for (i, a) in self.components.iter().enumerate() {
            for b in &self.components[i + 1..] {
                if !a.is_linear() || !b.is_linear() {
                    continue;
                }
                // zero(Q_b) inside zero(Q_a) iff Q_a subset of Q_b
                if a.linear_part.contains_space(&b.linear_part) {
                    return Err(ArrError::Inclusion {
                        outer: b.name.clone(),
                        inner: a.name.clone(),
                    });
                }
                if b.linear_part.contains_space(&a.linear_part) {
                    return Err(ArrError::Inclusion {
                        outer: a.name.clone(),
                        inner: b.name.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Running intersections D_k = Q_1 cap ... cap Q_{k+1} (0-based k).
    pub fn running_intersections(&self) -> Vec<LinearSpace> {
        let mut out: Vec<LinearSpace> = Vec::with_capacity(self.len());
        for c in &self.components {
            let d = match out.last() {
                None => c.linear_part.clone(),
                Some(prev) => prev.intersect(&c.linear_part).unwrap(),
            };
            out.push(d);
        }
        out
    }

    /// Verify that the given order is linearly joined.
    ///
    /// Linear-only: condition (*) holds at step k iff
    /// W_k = L_k cap span(L_1 ... L_{k-1}) lies in some L_j, j < k, i.e.
    /// Q_j is contained in Q_k + D_{k-1}.  For components with extra
    /// generators, the Corollary's sufficient axioms are checked instead.
    pub fn check_order(&self) -> CheckReport {
        let mode = if self.is_linear_only() {
            CheckMode::Geometric
        } else {
            CheckMode::SufficientAxioms
        };
        let mut witnesses = Vec::new();
        let mut first_violation = None;
        let mut d = self.components[0].linear_part.clone();
        for k in 1..self.len() {
            let qk = &self.components[k].linear_part;
            let t = qk.sum(&d).unwrap();
            let witness = (0..k)
                .find(|&j| t.contains_space(&self.components[j].linear_part));
            if witness.is_none() && first_violation.is_none() {
                first_violation = Some(k);
            }
            witnesses.push(witness);
            d = d.intersect(qk).unwrap();
        }
        let mut bad_gen = None;
        if mode == CheckMode::SufficientAxioms {
            'outer: for (i, ci) in self.components.iter().enumerate() {
                for g in &ci.extra_gens {
                    for (j, cj) in self.components.iter().enumerate() {
                        if i == j {
                            continue;
                        }
                        let r = crate::exactlin::linear_ideal_reduce(g, &cj.linear_part);
                        if !r.is_zero() {
                            bad_gen =
                                Some((ci.name.clone(), g.to_string(), cj.name.clone()));
                            break 'outer;
                        }
                    }
                }
            }
        }
        CheckReport {
            ok: first_violation.is_none() && bad_gen.is_none(),
            mode,
            witnesses,
            first_violation,
            bad_gen,
        }
    }

    /// Reorder components by the given permutation of indices.
    pub fn permuted(&self, order: &[usize]) -> Arrangement {
        Arrangement {
            vars: self.vars.clone(),
            components: order.iter().map(|&i| self.components[i].clone()).collect(),
        }
    }

    /// Search for a linearly joined order: DFS over permutations with greedy
    /// candidate ordering (largest intersection with the running span first,
    /// component names breaking ties) under a node budget.
    ///
    /// A None result is definitive for linear-only arrangements.
    pub fn find_order(&self, budget: u64) -> Result<Option<Vec<usize>>, ArrError> {
        const MAX_L: usize = 20;
        if self.len() > MAX_L {
            return Err(ArrError::TooManyComponents(self.len(), MAX_L));
        }
        // The extra-generator axioms do not depend on the order; check once.
        if !self.is_linear_only() {
            let probe = self.check_order();
            if probe.bad_gen.is_some() {
                return Ok(None);
            }
        }
        let l = self.len();
        if l <= 2 {
            // l = 1 is trivially joined; any pair of components is (condition
            // (*) at k = 2 always holds with witness j = 1).
            return Ok(Some((0..l).collect()));
        }
        let mut nodes: u64 = 0;
        let mut prefix: Vec<usize> = Vec::with_capacity(l);
        let mut used = vec![false; l];
        // Root choices in name order for determinism.
        let mut roots: Vec<usize> = (0..l).collect();
        roots.sort_by(|&a, &b| self.components[a].name.cmp(&self.components[b].name));
        for r in roots {
            used[r] = true;
            prefix.push(r);
            let d = self.components[r].linear_part.clone();
            if self.dfs(&mut prefix, &mut used, d, budget, &mut nodes)? {
                return Ok(Some(prefix));
            }
            prefix.pop();
            used[r] = false;
        }
        Ok(None)
    }

    fn dfs(
        &self,
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        d: LinearSpace,
        budget: u64,
        nodes: &mut u64,
    ) -> Result<bool, ArrError> {
        if prefix.len() == self.len() {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(ArrError::SearchBudgetExceeded(budget));
        }
        // Candidates that keep the order linearly joined, greedy-sorted by the
        // dimension of L_c cap span(prefix) descending, then by name.
        let mut cands: Vec<(usize, usize, LinearSpace)> = Vec::new();
        for c in 0..self.len() {
            if used[c] {
                continue;
            }
            let t = self.components[c].linear_part.sum(&d).unwrap();
            let valid = prefix
                .iter()
                .any(|&j| t.contains_space(&self.components[j].linear_part));
            if valid {
                // dim of the intersection with the span = n - dim(Q_c + D).
                cands.push((self.n_vars() - t.dim(), c, t));
            }
        }
        cands.sort_by(|a, b| {
            b.0.cmp(&a.0)
                .then_with(|| self.components[a.1].name.cmp(&self.components[b.1].name))
        });
        for (_, c, _) in cands {
            used[c] = true;
            prefix.push(c);
            let d2 = d.intersect(&self.components[c].linear_part).unwrap();
            if self.dfs(prefix, used, d2, budget, nodes)? {
                return Ok(true);
            }
            prefix.pop();
            used[c] = false;
        }
        Ok(false)
    }

    pub fn parse(input: &str) -> Result<Arrangement, ArrError> {
        let trimmed = input.trim_start();
        let arr = if trimmed.starts_with('{') {
            parse_json(input)?
        } else {
            TextParser::new(input).parse()?
        };
        arr.validate()?;
        Ok(arr)
    }
}

// ---------------------------------------------------------------------------
// Text format:
//   vars a b c x y z u;
//   component J1 { linear: a, b, c; }
//   component J2 { linear: y, z, a, b; gens: x*y - z^2; meta: depth=3; }
// ---------------------------------------------------------------------------

struct TextParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> TextParser<'a> {
    fn new(src: &'a str) -> Self {
        TextParser { src, pos: 0 }
    }

    fn line_col(&self) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for c in self.src[..self.pos].chars() {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn err(&self, msg: impl Into<String>) -> ArrError {
        let (line, col) = self.line_col();
        ArrError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        let bytes = self.src.as_bytes();
        loop {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos < bytes.len() && bytes[self.pos] == b'#' {
                while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                return;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> Result<(), ArrError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String, ArrError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len()
            && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected identifier"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    /// Text up to the next `;` or `}` at nesting depth 0.
    fn until_semicolon(&mut self) -> Result<&'a str, ArrError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos] != b';' && bytes[self.pos] != b'}' {
            self.pos += 1;
        }
        Ok(&self.src[start..self.pos])
    }

    fn parse(mut self) -> Result<Arrangement, ArrError> {
        let kw = self.ident()?;
        if kw != "vars" {
            return Err(self.err("expected `vars`"));
        }
        let mut vars = Vec::new();
        while self.peek() != Some(';') {
            let v = self.ident()?;
            if vars.contains(&v) {
                return Err(self.err(format!("duplicate variable `{v}`")));
            }
            vars.push(v);
            if self.peek() == Some(',') {
                self.eat(',')?;
            }
        }
        self.eat(';')?;
        if vars.is_empty() {
            return Err(self.err("no variables declared"));
        }

        let mut components = Vec::new();
        while self.peek().is_some() {
            let kw = self.ident()?;
            if kw != "component" {
                return Err(self.err("expected `component`"));
            }
            let name = self.ident()?;
            if components.iter().any(|c: &Component| c.name == name) {
                return Err(ArrError::DuplicateName(name));
            }
            self.eat('{')?;
            let mut linear = Vec::new();
            let mut gens = Vec::new();
            let mut meta = ComponentMeta::default();
            while self.peek() != Some('}') {
                let field = self.ident()?;
                self.eat(':')?;
                let body_pos = self.pos;
                let body = self.until_semicolon()?.to_string();
                match field.as_str() {
                    "linear" => {
                        for piece in split_top_level(&body) {
                            let p = Poly::parse(&vars, piece).map_err(|e| {
                                self.pos = body_pos;
                                self.err(e.to_string())
                            })?;
                            let lf = p.as_linear_form().ok_or_else(|| {
                                self.pos = body_pos;
                                self.err(format!("`{piece}` is not a linear form"))
                            })?;
                            linear.push(lf);
                        }
                    }
                    "gens" => {
                        for piece in split_top_level(&body) {
                            let p = Poly::parse(&vars, piece).map_err(|e| {
                                self.pos = body_pos;
                                self.err(e.to_string())
                            })?;
                            gens.push(p);
                        }
                    }
                    "meta" => {
                        for piece in split_top_level(&body) {
                            let (k, v) = piece.split_once('=').ok_or_else(|| {
                                self.pos = body_pos;
                                self.err("meta entries are key=value")
                            })?;
                            apply_meta(&mut meta, k.trim(), v.trim()).map_err(|m| {
                                self.pos = body_pos;
                                self.err(m)
                            })?;
                        }
                    }
                    other => {
                        return Err(self.err(format!("unknown field `{other}`")));
                    }
                }
                if self.peek() == Some(';') {
                    self.eat(';')?;
                }
            }
            self.eat('}')?;
            components.push(Component {
                name,
                linear_part: LinearSpace::span(&vars, &linear),
                extra_gens: gens,
                meta,
            });
        }
        if components.is_empty() {
            return Err(self.err("no components declared"));
        }
        Ok(Arrangement { vars, components })
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() {
        out.push(last);
    }
    out.retain(|p| !p.is_empty());
    out
}

fn apply_meta(meta: &mut ComponentMeta, key: &str, val: &str) -> Result<(), String> {
    let int = |v: &str| v.parse::<i64>().map_err(|_| format!("bad integer `{v}`"));
    let boolean = |v: &str| match v {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(format!("bad boolean `{v}`")),
    };
    match key {
        "depth" => meta.depth = Some(int(val)?),
        "reg" => meta.reg = Some(int(val)?),
        "dim" => meta.dim = Some(int(val)?),
        "deg" => meta.deg = Some(int(val)?),
        "is_CM" | "is_cm" => meta.is_cm = Some(boolean(val)?),
        "is_stci" => meta.is_stci = Some(boolean(val)?),
        other => return Err(format!("unknown meta key `{other}`")),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// JSON format, mirroring the text fields:
// {"vars": ["a","b"], "components": [{"name": "J1", "linear": ["a","b"],
//  "gens": ["x*y - z^2"], "meta": {"depth": 3}}]}
// ---------------------------------------------------------------------------

fn json_err(msg: impl Into<String>) -> ArrError {
    ArrError::Syntax {
        line: 0,
        col: 0,
        msg: msg.into(),
    }
}

fn parse_json(input: &str) -> Result<Arrangement, ArrError> {
    let v: serde_json::Value = serde_json::from_str(input)
        .map_err(|e| ArrError::Syntax {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })?;
    let obj = v.as_object().ok_or_else(|| json_err("top level must be an object"))?;
    let vars: Vec<String> = obj
        .get("vars")
        .and_then(|x| x.as_array())
        .ok_or_else(|| json_err("missing `vars` array"))?
        .iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| json_err("`vars` entries must be strings"))
        })
        .collect::<Result<_, _>>()?;
    let comps = obj
        .get("components")
        .and_then(|x| x.as_array())
        .ok_or_else(|| json_err("missing `components` array"))?;
    let mut components = Vec::new();
    for c in comps {
        let co = c.as_object().ok_or_else(|| json_err("component must be an object"))?;
        let name = co
            .get("name")
            .and_then(|x| x.as_str())
            .ok_or_else(|| json_err("component missing `name`"))?
            .to_string();
        if components.iter().any(|c: &Component| c.name == name) {
            return Err(ArrError::DuplicateName(name));
        }
        let parse_polys = |key: &str| -> Result<Vec<Poly>, ArrError> {
            match co.get(key) {
                None => Ok(Vec::new()),
                Some(a) => a
                    .as_array()
                    .ok_or_else(|| json_err(format!("`{key}` must be an array")))?
                    .iter()
                    .map(|x| {
                        let s = x
                            .as_str()
                            .ok_or_else(|| json_err(format!("`{key}` entries must be strings")))?;
                        Poly::parse(&vars, s).map_err(|e| json_err(e.to_string()))
                    })
                    .collect(),
            }
        };
        let linear = parse_polys("linear")?
            .into_iter()
            .map(|p| {
                p.as_linear_form()
                    .ok_or_else(|| json_err(format!("non-linear entry in `linear` of `{name}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let gens = parse_polys("gens")?;
        let mut meta = ComponentMeta::default();
        if let Some(m) = co.get("meta").and_then(|x| x.as_object()) {
            for (k, val) in m {
                let s = match val {
                    serde_json::Value::Bool(b) => b.to_string(),
                    serde_json::Value::Number(n) => n.to_string(),
                    serde_json::Value::String(s) => s.clone(),
                    _ => return Err(json_err(format!("bad meta value for `{k}`"))),
                };
                apply_meta(&mut meta, k, &s).map_err(json_err)?;
            }
        }
        components.push(Component {
            name,
            linear_part: LinearSpace::span(&vars, &linear),
            extra_gens: gens,
            meta,
        });
    }
    if components.is_empty() {
        return Err(json_err("no components declared"));
    }
    Ok(Arrangement { vars, components })
}

/// Convenience: a linear-only arrangement from named generator lists.
pub fn linear_arrangement(vars: &[&str], comps: &[(&str, &[&str])]) -> Arrangement {
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let components = comps
        .iter()
        .map(|(name, gens)| {
            let forms: Vec<crate::LinForm> = gens
                .iter()
                .map(|g| {
                    Poly::parse(&vars, g)
                        .unwrap()
                        .as_linear_form()
                        .expect("linear form")
                })
                .collect();
            Component {
                name: name.to_string(),
                linear_part: LinearSpace::span(&vars, &forms),
                extra_gens: Vec::new(),
                meta: ComponentMeta::default(),
            }
        })
        .collect();
    Arrangement { vars, components }
}

/// The running example: four linear components in K[a,b,c,x,y,z,u].
pub fn example_one() -> Arrangement {
    linear_arrangement(
        &["a", "b", "c", "x", "y", "z", "u"],
        &[
            ("J1", &["a", "b", "c"]),
            ("J2", &["y", "z", "a", "b"]),
            ("J3", &["x", "z-u", "b", "c"]),
            ("J4", &["x-u", "y-u", "a", "c"]),
        ],
    )
}
