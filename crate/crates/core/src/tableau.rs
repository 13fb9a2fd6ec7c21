//! Triangle tableaux for linearly joined arrangements: the inductive builder,
//! the five structural properties, Schmitt-Vogel certificates, and the
//! diagonal sums generating the ideal up to radical.

use crate::decomp::LJDecomposition;
use crate::exactlin::{LinForm, LinearSpace};
use crate::poly::Poly;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TabError {
    #[error("builder invariant violated at stage {stage}: {msg}")]
    AlgorithmInvariantViolation { stage: usize, msg: String },
    #[error("triangle property {property} fails: {detail}")]
    PropertyFailure { property: u8, detail: String },
    #[error("no Schmitt-Vogel witness for pair ({a}, {b}) in line {line}")]
    NoSVWitness { line: usize, a: String, b: String },
}

/// One product entry x_i * x_{i,offset} of the triangle.
#[derive(Debug, Clone)]
pub struct Entry {
    /// 1-based index of the left factor among the elements.
    pub elem: usize,
    /// 0-based offset into the element's row; offset 0 is the apex.
    pub offset: usize,
    pub left: LinForm,
    pub right: LinForm,
}

impl Entry {
    pub fn poly(&self, vars: &[String]) -> Poly {
        self.left.to_poly(vars).mul(&self.right.to_poly(vars))
    }
}

/// The triangle: an ordered element list x_1..x_n (apex last) and, for a
/// prefix of the elements, the row of right factors x_{i,0}..x_{i,s_i}
/// (each row starts with the apex).  The entry x_i * x_{i,j} sits in line
/// i + j (1-based lines).
#[derive(Debug, Clone)]
pub struct Tableau {
    pub vars: Vec<String>,
    pub elements: Vec<LinForm>,
    pub rows: Vec<Vec<LinForm>>,
}

/// Witness that the pair (p, p'') of entries in `line` is dominated by the
/// entry `witness` of an earlier line: (p * p'')^m lies in the ideal of the
/// witness entry.
#[derive(Debug, Clone)]
pub struct PairWitness {
    pub line: usize,
    pub pair: (usize, usize),
    pub witness_line: usize,
    pub witness_entry: usize,
    pub m: u32,
}

#[derive(Debug, Clone, Default)]
pub struct SVCertificate {
    pub witnesses: Vec<PairWitness>,
}

impl Tableau {
    pub fn empty(vars: &[String]) -> Tableau {
        Tableau {
            vars: vars.to_vec(),
            elements: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn apex(&self) -> Option<&LinForm> {
        self.elements.last()
    }

    pub fn line_count(&self) -> usize {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| i + r.len())
            .max()
            .unwrap_or(0)
    }

    /// Lines 1..=line_count, each with entries ordered left to right
    /// (descending element index, the paper's layout).
    pub fn lines(&self) -> Vec<Vec<Entry>> {
        let mut out = vec![Vec::new(); self.line_count()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, right) in row.iter().enumerate() {
                out[i + j].push(Entry {
                    elem: i + 1,
                    offset: j,
                    left: self.elements[i].clone(),
                    right: right.clone(),
                });
            }
        }
        for line in &mut out {
            line.sort_by(|a, b| b.elem.cmp(&a.elem));
        }
        out
    }

    /// q_k = sum of the entries of line k.
    pub fn diagonal_sums(&self) -> Vec<Poly> {
        self.lines()
            .iter()
            .map(|line| {
                line.iter()
                    .fold(Poly::zero(&self.vars), |acc, e| acc.add(&e.poly(&self.vars)))
            })
            .collect()
    }

    /// All entry products, flat.
    pub fn all_products(&self) -> Vec<Poly> {
        self.lines()
            .iter()
            .flat_map(|line| line.iter().map(|e| e.poly(&self.vars)))
            .collect()
    }

    /// X_{i,j} = span of x_{i,0}..x_{i,j} (0-based row index i and offset j).
    fn prefix_span(&self, i: usize, j: usize) -> LinearSpace {
        LinearSpace::span(&self.vars, &self.rows[i][..=j])
    }

    /// Check the five triangle properties of the structure theorem.
    pub fn verify(&self) -> Result<(), TabError> {
        if self.rows.is_empty() {
            return Ok(());
        }
        let fail = |property: u8, detail: String| TabError::PropertyFailure { property, detail };
        let apex = self.apex().unwrap();

        // 1. All rows share the apex as their first entry.
        for (i, row) in self.rows.iter().enumerate() {
            match row.first() {
                Some(first) if first.proportional_to(apex) => {}
                _ => return Err(fail(1, format!("row {} does not start at the apex", i + 1))),
            }
        }
        // 2. Products containing the apex appear only in the left diagonal
        // (offset 0): no other factor may be proportional to the apex.
        for (i, row) in self.rows.iter().enumerate() {
            if self.elements[i].proportional_to(apex) {
                return Err(fail(2, format!("apex multiplies row {} on the left", i + 1)));
            }
            for (j, right) in row.iter().enumerate().skip(1) {
                if right.proportional_to(apex) {
                    return Err(fail(
                        2,
                        format!("apex reappears at row {}, offset {j}", i + 1),
                    ));
                }
            }
        }
        // 3. Products containing x_1 appear only in the right diagonal, i.e.
        // x_1 never shows up as a right factor of another row and entries of
        // row 1 are rightmost in their lines (automatic from the layout).
        let x1 = &self.elements[0];
        for (i, row) in self.rows.iter().enumerate().skip(1) {
            for (j, right) in row.iter().enumerate() {
                if right.proportional_to(x1) {
                    return Err(fail(
                        3,
                        format!("x_1 appears as a right factor at row {}, offset {j}", i + 1),
                    ));
                }
            }
        }
        // 4. No holes (structural) and each row is linearly independent.
        for (i, row) in self.rows.iter().enumerate() {
            let span = LinearSpace::span(&self.vars, row);
            if span.dim() != row.len() {
                return Err(fail(4, format!("row {} is linearly dependent", i + 1)));
            }
        }
        // 5. For entries (i, k-i) and (m, k-m) in the same line with m > i:
        // either the right factor x_{m,k-m} already occurs in row i strictly
        // before line k (then the entry x_i * x_{m,k-m} dominates the pair,
        // the argument by which the H_s verification dismisses the apex
        // case), or x_m lies in some prefix span X_{i,s} with s < k, or x_m
        // is outside row i's span and the next right factor x_{m,k+1-m} lies
        // in some X_{i,s} with s < k.
        for line in self.lines() {
            for a in &line {
                for b in &line {
                    if b.elem <= a.elem {
                        continue;
                    }
                    let (i, m) = (a.elem, b.elem);
                    let k = a.elem + a.offset;
                    let row_i = &self.rows[i - 1];
                    if row_i
                        .iter()
                        .enumerate()
                        .any(|(j, r)| i + j < k && r.proportional_to(&b.right))
                    {
                        continue;
                    }
                    let xm = &self.elements[m - 1];
                    let full = self.prefix_span(i - 1, row_i.len() - 1);
                    if full.contains_vec(xm) {
                        let s = (0..row_i.len())
                            .find(|&s| self.prefix_span(i - 1, s).contains_vec(xm))
                            .unwrap();
                        if s >= k {
                            return Err(fail(
                                5,
                                format!("x_{m} enters X_{{{i},s}} only at s = {s} >= k = {k}"),
                            ));
                        }
                    } else {
                        let next_off = k + 1 - m;
                        if let Some(next) = self.rows[m - 1].get(next_off) {
                            let s = (0..row_i.len())
                                .find(|&s| self.prefix_span(i - 1, s).contains_vec(next));
                            match s {
                                Some(s) if s < k => {}
                                _ => {
                                    return Err(fail(
                                        5,
                                        format!(
                                            "x_{{{m},{next_off}}} not in X_{{{i},s}} for s < {k}"
                                        ),
                                    ))
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Schmitt-Vogel conditions: line 1 is a singleton and every pair of
    /// distinct entries in a line is dominated by an earlier entry.
    pub fn sv_certificate(&self) -> Result<SVCertificate, TabError> {
        let lines = self.lines();
        let mut cert = SVCertificate::default();
        if lines.is_empty() {
            return Ok(cert);
        }
        if lines[0].len() != 1 {
            return Err(TabError::PropertyFailure {
                property: 2,
                detail: "line 1 must have exactly one entry".into(),
            });
        }
        for (k, line) in lines.iter().enumerate().skip(1) {
            for (ai, a) in line.iter().enumerate() {
                for (bi, b) in line.iter().enumerate().skip(ai + 1) {
                    let found = (0..k).find_map(|w| {
                        lines[w].iter().enumerate().find_map(|(wi, cand)| {
                            witness_exponent(cand, a, b).map(|m| (w, wi, m))
                        })
                    });
                    match found {
                        Some((w, wi, m)) => cert.witnesses.push(PairWitness {
                            line: k + 1,
                            pair: (ai, bi),
                            witness_line: w + 1,
                            witness_entry: wi,
                            m,
                        }),
                        None => {
                            return Err(TabError::NoSVWitness {
                                line: k + 1,
                                a: a.poly(&self.vars).to_string(),
                                b: b.poly(&self.vars).to_string(),
                            })
                        }
                    }
                }
            }
        }
        Ok(cert)
    }

    /// Paper-style fixed-width rendering, one text line per tableau line,
    /// right-aligned.
    pub fn render_text(&self) -> String {
        let lines = self.lines();
        let rendered: Vec<String> = lines
            .iter()
            .map(|line| {
                line.iter()
                    .map(|e| format!("{}", e.poly(&self.vars)))
                    .collect::<Vec<_>>()
                    .join(",  ")
            })
            .collect();
        let width = rendered.iter().map(String::len).max().unwrap_or(0);
        rendered
            .iter()
            .map(|r| format!("{r:>width$}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Smallest m in {1, 2} with (a * b)^m inside the principal ideal of the
/// candidate entry, decided on the linear factors: each factor of the
/// candidate must be proportional to a factor of a*b; m = 1 if two distinct
/// factor slots can be matched, m = 2 otherwise.
fn witness_exponent(cand: &Entry, a: &Entry, b: &Entry) -> Option<u32> {
    let factors = [&a.left, &a.right, &b.left, &b.right];
    let m1: Vec<usize> = (0..4)
        .filter(|&t| cand.left.proportional_to(factors[t]))
        .collect();
    let m2: Vec<usize> = (0..4)
        .filter(|&t| cand.right.proportional_to(factors[t]))
        .collect();
    if m1.is_empty() || m2.is_empty() {
        return None;
    }
    let distinct = m1
        .iter()
        .any(|t1| m2.iter().any(|t2| t1 != t2));
    Some(if distinct { 1 } else { 2 })
}

/// Build the triangle by the constructive induction of the structure
/// theorem, processing the basis of each Delta_i in pivot order.
pub fn build_tableau(dec: &LJDecomposition) -> Result<Tableau, TabError> {
    let mut tab = Tableau::empty(&dec.vars);
    for stage in 2..=dec.len() {
        let pl = &dec.p[stage - 1];
        for x in &dec.delta[stage - 1].basis {
            add_element(&mut tab, x, pl, stage)?;
        }
        tab.verify().map_err(|e| TabError::AlgorithmInvariantViolation {
            stage,
            msg: e.to_string(),
        })?;
    }
    Ok(tab)
}

fn add_element(
    tab: &mut Tableau,
    x: &LinForm,
    pl: &LinearSpace,
    stage: usize,
) -> Result<(), TabError> {
    let fail = |msg: String| TabError::AlgorithmInvariantViolation { stage, msg };
    if tab.elements.is_empty() {
        // Base: one Delta element against a basis of P; apex is the element.
        tab.elements = pl.basis.clone();
        tab.elements.push(x.clone());
        tab.rows = vec![vec![x.clone()]; pl.dim()];
        return Ok(());
    }
    let apex = tab.apex().unwrap().clone();
    if !pl.contains_vec(&apex) {
        // Case A: the left multipliers lie in <P_l>; complete them to a
        // basis, add {x} x P_l as a new left diagonal, x becomes the apex.
        let multipliers: Vec<LinForm> = tab.elements[..tab.rows.len()].to_vec();
        for mult in &multipliers {
            if !pl.contains_vec(mult) {
                return Err(fail(format!(
                    "left multiplier {} outside <P_{stage}>",
                    mult.display(&tab.vars)
                )));
            }
        }
        let span = LinearSpace::span(&tab.vars, &multipliers);
        if span.dim() != multipliers.len() {
            return Err(fail("left multipliers are linearly dependent".into()));
        }
        let basis = pl.complete_basis(&multipliers);
        let completions = basis[multipliers.len()..].to_vec();
        for row in &mut tab.rows {
            row.insert(0, x.clone());
        }
        let at = tab.rows.len();
        for (t, c) in completions.into_iter().enumerate() {
            tab.elements.insert(at + t, c);
            tab.rows.push(vec![x.clone()]);
        }
        tab.elements.push(x.clone());
    } else {
        // Case B: grow an ordered basis of P_l starting from the apex by the
        // H_s induction, then add {x} x P_l as a new right diagonal with x
        // as the new first element.
        let mut chosen = vec![apex.clone()];
        loop {
            let mut span = LinearSpace::span(&tab.vars, &chosen);
            let viol = first_violation(tab, &span);
            let Some((i, j)) = viol else { break };
            let e = &tab.elements[i];
            let next = if pl.contains_vec(e) {
                e.clone()
            } else {
                tab.rows[i][j].clone()
            };
            if !pl.contains_vec(&next) {
                return Err(fail(format!(
                    "H_s candidate {} outside <P_{stage}>",
                    next.display(&tab.vars)
                )));
            }
            if span.contains_vec(&next) {
                return Err(fail("H_s induction stalled".into()));
            }
            chosen.push(next);
            span = LinearSpace::span(&tab.vars, &chosen);
            debug_assert_eq!(span.dim(), chosen.len());
        }
        let basis = pl.complete_basis(&chosen);
        tab.elements.insert(0, x.clone());
        tab.rows.insert(0, basis);
    }
    Ok(())
}

/// First entry (0-based row index, offset) violating the H_s statement for
/// the current prefix span: scan lines upward, entries by ascending element
/// index.  An entry x_i * x_{i,j} violates when neither of its factors lies
/// in the span (a product with one factor already chosen is dominated, which
/// is how the H_s verification dismisses the apex products).
fn first_violation(tab: &Tableau, span: &LinearSpace) -> Option<(usize, usize)> {
    let count = tab.line_count();
    for k in 1..=count {
        for (i, row) in tab.rows.iter().enumerate() {
            let Some(j) = k.checked_sub(i + 1) else { continue };
            if j >= row.len() {
                continue;
            }
            let e = &tab.elements[i];
            if !span.contains_vec(e) && !span.contains_vec(&row[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{example_one, linear_arrangement};
    use crate::decomp::decompose;
    use crate::poly::Poly;

    fn line_polys(tab: &Tableau) -> Vec<Vec<Poly>> {
        tab.lines()
            .iter()
            .map(|line| line.iter().map(|e| e.poly(&tab.vars)).collect())
            .collect()
    }

    fn assert_line_sets(tab: &Tableau, expect: &[&[&str]]) {
        let got = line_polys(tab);
        assert_eq!(got.len(), expect.len(), "line count");
        for (k, (g, e)) in got.iter().zip(expect).enumerate() {
            assert_eq!(g.len(), e.len(), "line {} size", k + 1);
            for want in *e {
                let wp = Poly::parse(&tab.vars, want).unwrap();
                assert!(
                    g.iter().any(|p| p == &wp || p == &wp.neg()),
                    "line {}: missing {want}",
                    k + 1
                );
            }
        }
    }

    #[test]
    fn example_one_triangle() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        assert_line_sets(
            &tab,
            &[
                &["c*b"],
                &["c*a", "a*b"],
                &["c*y", "a*x", "b*(x-u)"],
                &["c*z", "a*(z-u)", "b*(y-u)"],
            ],
        );
        tab.verify().unwrap();
    }

    #[test]
    fn example_one_diagonal_sums() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        let sums = tab.diagonal_sums();
        let v = &arr.vars;
        let expect = [
            "c*b",
            "c*a + a*b",
            "c*y + a*x + b*(x-u)",
            "c*z + a*(z-u) + b*(y-u)",
        ];
        assert_eq!(sums.len(), 4);
        for (s, e) in sums.iter().zip(expect) {
            assert_eq!(s, &Poly::parse(v, e).unwrap());
        }
    }

    #[test]
    fn single_product_pair() {
        let arr = linear_arrangement(&["a", "b"], &[("A", &["a"]), ("B", &["b"])]);
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        assert_line_sets(&tab, &[&["a*b"]]);
        tab.verify().unwrap();
        tab.sv_certificate().unwrap();
    }

    #[test]
    fn base_anti_diagonal_shape() {
        // l = 2 with dim Delta = 2, dim P = 2: a 2x2 grid in 3 lines.
        let arr = linear_arrangement(
            &["d1", "d2", "p1", "p2"],
            &[("A", &["d1", "d2"]), ("B", &["p1", "p2"])],
        );
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        let lines = line_polys(&tab);
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0].len(), 1);
        assert_eq!(lines[1].len(), 2);
        assert_eq!(lines[2].len(), 1);
        tab.verify().unwrap();
        tab.sv_certificate().unwrap();
    }

    #[test]
    fn line_count_matches_formula() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        let mut expect = 0;
        for i in 2..=dec.len() {
            let d_red = dec.d[i - 2].dim() - dec.d_tail.dim();
            expect = expect.max(dec.p[i - 1].dim() + d_red - 1);
        }
        assert_eq!(tab.line_count(), expect);
        assert_eq!(tab.line_count(), 4);
    }

    #[test]
    fn products_match_quadric_generators() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        let mut products = tab.all_products();
        let mut quads: Vec<Poly> = dec
            .quadric_generators(dec.len())
            .into_iter()
            .filter(|q| q.degree() == Some(2))
            .collect();
        assert_eq!(products.len(), quads.len());
        // match up to sign (scalar normalization of the factors)
        products.sort_by_key(|p| p.to_string());
        for q in &mut quads {
            let found = products
                .iter()
                .any(|p| p == q || *p == q.neg());
            assert!(found, "{q} not among tableau products");
        }
    }

    #[test]
    fn sv_witnesses_bounded_exponent() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        let cert = tab.sv_certificate().unwrap();
        assert!(!cert.witnesses.is_empty());
        assert!(cert.witnesses.iter().all(|w| w.m <= 2));
    }

    #[test]
    fn tampered_tableau_fails() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let mut tab = build_tableau(&dec).unwrap();
        // Swap two right factors across lines: breaks the span conditions.
        let a = tab.rows[0][1].clone();
        let b = tab.rows[0][3].clone();
        tab.rows[0][1] = b;
        tab.rows[0][3] = a;
        assert!(tab.verify().is_err() || tab.sv_certificate().is_err());
    }

    #[test]
    fn render_has_one_text_line_per_tableau_line() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        let text = tab.render_text();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().next().unwrap().ends_with("b*c"));
    }

    #[test]
    fn sums_vanish_on_every_component() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        for q in tab.diagonal_sums() {
            for comp in &arr.components {
                assert!(
                    crate::exactlin::linear_ideal_reduce(&q, &comp.linear_part).is_zero(),
                    "{q} does not vanish on {}",
                    comp.name
                );
            }
        }
    }
}
