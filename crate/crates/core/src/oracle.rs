//! Independent brute-force verification: graded Betti numbers of
//! square-free monomial ideals via the Hochster formula (reduced homology
//! of induced subcomplexes, exact ranks), plus zero-set containment checks
//! for radical identities.

use crate::arrangement::Arrangement;
use crate::exactlin::{linear_ideal_reduce, rref};
use crate::{Poly, Rat};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

pub const DEFAULT_VAR_CAP: usize = 14;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{n_vars} variables exceeds the oracle cap {cap}")]
    CapExceeded { n_vars: usize, cap: usize },
    #[error("generator `{0}` is not square-free")]
    NotSquarefree(String),
    #[error("the unit ideal has no Stanley-Reisner complex")]
    UnitIdeal,
    #[error("exact vanishing mode needs a linear-only arrangement (component `{0}`)")]
    NotLinear(String),
    #[error("`{poly}` does not reduce to zero modulo component `{component}`")]
    NotVanishing { component: String, poly: String },
    #[error("common zero off the arrangement: {0:?}")]
    CounterexamplePoint(Vec<u64>),
}

/// Coefficients for the homology ranks.  Rational is the default; GF(2)
/// is a cross-check mode (torsion would show up as a rank difference).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomologyField {
    Rational,
    GF2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub n_vars: usize,
    /// (homological degree i, internal degree j) -> beta_{i,j}(S/I).
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn beta(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.n_vars - self.projdim()
    }

    /// reg(S/I) = max{j - i : beta_{i,j} != 0}.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleInvariants {
    pub projdim: usize,
    pub depth: usize,
    /// reg(S/I).
    pub reg: usize,
    /// reg(S/I) <= 1 and every minimal generator has degree 2.
    pub two_linear: bool,
}

fn gen_masks(gens: &[Vec<usize>], n: usize) -> Result<Vec<u32>, OracleError> {
    let mut masks = Vec::with_capacity(gens.len());
    for g in gens {
        let mut m = 0u32;
        for &v in g {
            assert!(v < n, "generator variable index out of range");
            if m & (1 << v) != 0 {
                return Err(OracleError::NotSquarefree(format!("{g:?}")));
            }
            m |= 1 << v;
        }
        if m == 0 {
            return Err(OracleError::UnitIdeal);
        }
        masks.push(m);
    }
    // Minimalize: drop generators containing another generator.
    let mut minimal = Vec::new();
    'outer: for (i, &m) in masks.iter().enumerate() {
        for (j, &o) in masks.iter().enumerate() {
            if i != j && o & m == o && (o != m || j < i) {
                continue 'outer;
            }
        }
        minimal.push(m);
    }
    Ok(minimal)
}

fn rank_rational(rows: Vec<Vec<Rat>>) -> usize {
    rref(rows)
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .count()
}

fn rank_gf2(mut rows: Vec<Vec<u64>>) -> usize {
    let blocks = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..blocks * 64 {
        let (b, bit) = (col / 64, col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][b] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let piv_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[b] >> bit & 1 == 1 {
                for (x, y) in row.iter_mut().zip(&piv_row) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Reduced homology ranks (by dimension, starting at -1) of the induced
/// subcomplex on `sigma` of the Stanley-Reisner complex of `gens`.
fn reduced_homology(sigma: u32, gens: &[u32], field: HomologyField) -> Vec<(i32, usize)> {
    // Cone point: a vertex of sigma shared by no generator inside sigma
    // cones the restriction, so all reduced homology vanishes.
    let mut rest = sigma;
    while rest != 0 {
        let v = rest & rest.wrapping_neg();
        if !gens.iter().any(|&g| g & !sigma == 0 && g & v != 0) {
            return Vec::new();
        }
        rest &= rest - 1;
    }

    // Faces of the restriction, grouped by cardinality (index = |face|).
    let card = sigma.count_ones() as usize;
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); card + 1];
    let mut tau = sigma;
    loop {
        if !gens.iter().any(|&g| g & !tau == 0) {
            faces[tau.count_ones() as usize].push(tau);
        }
        if tau == 0 {
            break;
        }
        tau = (tau - 1) & sigma;
    }

    // Boundary ranks: ranks[c] = rank of d_c : C_{c-1 faces of card c} -> card c-1.
    let mut ranks = vec![0usize; card + 2];
    for c in 1..=card {
        if faces[c].is_empty() || faces[c - 1].is_empty() {
            continue;
        }
        let col_of: BTreeMap<u32, usize> =
            faces[c - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let ncols = faces[c - 1].len();
        match field {
            HomologyField::Rational => {
                let mut rows = Vec::with_capacity(faces[c].len());
                for &f in &faces[c] {
                    let mut row = vec![Rat::zero(); ncols];
                    let mut sign = Rat::one();
                    let mut rest = f;
                    while rest != 0 {
                        let v = rest & rest.wrapping_neg();
                        if let Some(&j) = col_of.get(&(f & !v)) {
                            row[j] = sign.clone();
                        }
                        sign = -sign;
                        rest &= rest - 1;
                    }
                    rows.push(row);
                }
                ranks[c] = rank_rational(rows);
            }
            HomologyField::GF2 => {
                let blocks = ncols.div_ceil(64);
                let mut rows = Vec::with_capacity(faces[c].len());
                for &f in &faces[c] {
                    let mut row = vec![0u64; blocks];
                    let mut rest = f;
                    while rest != 0 {
                        let v = rest & rest.wrapping_neg();
                        if let Some(&j) = col_of.get(&(f & !v)) {
                            row[j / 64] |= 1 << (j % 64);
                        }
                        rest &= rest - 1;
                    }
                    rows.push(row);
                }
                ranks[c] = rank_gf2(rows);
            }
        }
    }

    let mut out = Vec::new();
    for c in 0..=card {
        let h = faces[c].len() - ranks[c] - ranks[c + 1];
        if h > 0 {
            out.push((c as i32 - 1, h));
        }
    }
    out
}

pub fn hochster_betti_field(
    n_vars: usize,
    gens: &[Vec<usize>],
    cap: usize,
    field: HomologyField,
) -> Result<BettiTable, OracleError> {
    if n_vars > cap || n_vars >= 32 {
        return Err(OracleError::CapExceeded { n_vars, cap });
    }
    let masks = gen_masks(gens, n_vars)?;
    let mut entries = BTreeMap::new();
    entries.insert((0, 0), 1);
    for sigma in 1u32..1 << n_vars {
        let j = sigma.count_ones() as usize;
        for (d, h) in reduced_homology(sigma, &masks, field) {
            // beta_{i, sigma} = rank H~_{|sigma| - i - 1}.
            let i = j as i32 - d - 1;
            if i >= 1 {
                *entries.entry((i as usize, j)).or_insert(0) += h as u64;
            }
        }
    }
    Ok(BettiTable { n_vars, entries })
}

pub fn hochster_betti(n_vars: usize, gens: &[Vec<usize>]) -> Result<BettiTable, OracleError> {
    hochster_betti_field(n_vars, gens, DEFAULT_VAR_CAP, HomologyField::Rational)
}

pub fn oracle_invariants(
    n_vars: usize,
    gens: &[Vec<usize>],
) -> Result<OracleInvariants, OracleError> {
    let table = hochster_betti(n_vars, gens)?;
    let masks = gen_masks(gens, n_vars)?;
    let reg = table.reg();
    Ok(OracleInvariants {
        projdim: table.projdim(),
        depth: table.depth(),
        reg,
        two_linear: reg <= 1 && masks.iter().all(|m| m.count_ones() == 2),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VanishMode {
    /// Reduce each polynomial modulo every component's linear ideal.
    Exact,
    /// Enumerate all points of GF(2)^n.
    Gf2Exhaustive,
    /// Sample `count` random points of GF(p)^n.
    GfSample { p: u64, count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishReport {
    pub mode: String,
    pub points_checked: u64,
    pub ok: bool,
}

fn on_some_component(arr: &Arrangement, point: &[u64], p: u64) -> bool {
    arr.components.iter().any(|c| {
        c.linear_part
            .basis
            .iter()
            .all(|f| f.to_poly(&arr.vars).eval_gf(point, p) == 0)
            && c.extra_gens.iter().all(|g| g.eval_gf(point, p) == 0)
    })
}

/// Evidence for the radical identity rad(J) = rad(q_0, ..., q_r).
///
/// Exact mode certifies one direction (each q lies in every component's
/// ideal); the finite-field modes check the reverse direction on points:
/// every common zero of the q's must lie on the union of the components.
pub fn vanishing_and_containment(
    qs: &[Poly],
    arr: &Arrangement,
    mode: VanishMode,
) -> Result<VanishReport, OracleError> {
    match mode {
        VanishMode::Exact => {
            for c in &arr.components {
                if !c.is_linear() {
                    return Err(OracleError::NotLinear(c.name.clone()));
                }
                for q in qs {
                    if !linear_ideal_reduce(q, &c.linear_part).is_zero() {
                        return Err(OracleError::NotVanishing {
                            component: c.name.clone(),
                            poly: q.to_string(),
                        });
                    }
                }
            }
            Ok(VanishReport {
                mode: "exact".into(),
                points_checked: 0,
                ok: true,
            })
        }
        VanishMode::Gf2Exhaustive => {
            let n = arr.n_vars();
            assert!(n <= 16, "gf2-exhaustive needs <= 16 variables");
            let mut checked = 0;
            for bits in 0u32..1 << n {
                let point: Vec<u64> = (0..n).map(|i| (bits >> i & 1) as u64).collect();
                if qs.iter().all(|q| q.eval_gf(&point, 2) == 0) {
                    checked += 1;
                    if !on_some_component(arr, &point, 2) {
                        return Err(OracleError::CounterexamplePoint(point));
                    }
                }
            }
            Ok(VanishReport {
                mode: "gf2-exhaustive".into(),
                points_checked: checked,
                ok: true,
            })
        }
        VanishMode::GfSample { p, count, seed } => {
            let n = arr.n_vars();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut checked = 0;
            for _ in 0..count {
                let point: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
                if qs.iter().all(|q| q.eval_gf(&point, p) == 0) {
                    checked += 1;
                    if !on_some_component(arr, &point, p) {
                        return Err(OracleError::CounterexamplePoint(point));
                    }
                }
            }
            Ok(VanishReport {
                mode: format!("gf-sample(p={p})"),
                points_checked: checked,
                ok: true,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::example_one;
    use crate::decomp::decompose;
    use crate::tableau::build_tableau;

    /// Generators given as strings of single-letter variables over an
    /// alphabet prefix of size n ("ad" -> {0, 3}).
    fn gens(n: usize, words: &[&str]) -> Vec<Vec<usize>> {
        words
            .iter()
            .map(|w| {
                w.chars()
                    .map(|ch| {
                        let i = (ch as u8 - b'a') as usize;
                        assert!(i < n);
                        i
                    })
                    .collect()
            })
            .collect()
    }

    const I1: &[&str] = &["fd", "ad", "fe", "de", "ae", "fb", "fa"];

    #[test]
    fn principal_degree_two() {
        let inv = oracle_invariants(2, &gens(2, &["ab"])).unwrap();
        assert_eq!(inv.projdim, 1);
        assert_eq!(inv.reg, 1);
        assert!(inv.two_linear);
    }

    #[test]
    fn hollow_triangle_circle_homology() {
        let t = hochster_betti(3, &gens(3, &["abc"])).unwrap();
        assert_eq!(t.beta(1, 3), 1);
        assert_eq!(t.projdim(), 1);
        assert_eq!(t.reg(), 2);
    }

    #[test]
    fn zero_ideal() {
        let t = hochster_betti(4, &[]).unwrap();
        assert_eq!(t.projdim(), 0);
        assert_eq!(t.depth(), 4);
        assert_eq!(t.reg(), 0);
    }

    #[test]
    fn four_cycle_not_two_linear() {
        let inv = oracle_invariants(4, &gens(4, &["ac", "bd"])).unwrap();
        assert_eq!(inv.projdim, 2);
        assert_eq!(inv.reg, 2);
        assert!(!inv.two_linear);
    }

    #[test]
    fn i1_projdim_four_reg_one() {
        let inv = oracle_invariants(6, &gens(6, I1)).unwrap();
        assert_eq!(inv.projdim, 4);
        assert_eq!(inv.depth, 2);
        assert_eq!(inv.reg, 1);
        assert!(inv.two_linear);
    }

    #[test]
    fn depth_plus_projdim_is_n() {
        for (n, ws) in [
            (6usize, I1.to_vec()),
            (4, vec!["ac", "bd"]),
            (3, vec!["abc"]),
            (5, vec!["ab", "cd", "ae"]),
        ] {
            let t = hochster_betti(n, &gens(n, &ws)).unwrap();
            assert_eq!(t.depth() + t.projdim(), n);
        }
    }

    #[test]
    fn permutation_invariance() {
        let base = hochster_betti(6, &gens(6, I1)).unwrap();
        // Relabel via the permutation a<->f, b<->e, c<->d.
        let perm = |w: &str| -> String {
            w.chars()
                .map(|c| (b'a' + (5 - (c as u8 - b'a'))) as char)
                .collect()
        };
        let words: Vec<String> = I1.iter().map(|w| perm(w)).collect();
        let refs: Vec<&str> = words.iter().map(|s| s.as_str()).collect();
        let permuted = hochster_betti(6, &gens(6, &refs)).unwrap();
        assert_eq!(base.entries, permuted.entries);
    }

    #[test]
    fn gf2_mode_agrees_with_rational() {
        for (n, ws) in [(6usize, I1.to_vec()), (3, vec!["abc"]), (4, vec!["ac", "bd"])] {
            let g = gens(n, &ws);
            let q = hochster_betti_field(n, &g, DEFAULT_VAR_CAP, HomologyField::Rational).unwrap();
            let f2 = hochster_betti_field(n, &g, DEFAULT_VAR_CAP, HomologyField::GF2).unwrap();
            assert_eq!(q.entries, f2.entries);
        }
    }

    #[test]
    fn cap_and_squarefree_errors() {
        assert!(matches!(
            hochster_betti(20, &[]),
            Err(OracleError::CapExceeded { .. })
        ));
        assert!(matches!(
            hochster_betti(2, &[vec![0, 0]]),
            Err(OracleError::NotSquarefree(_))
        ));
    }

    #[test]
    fn example_sums_vanish_exact_and_gf2() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        let sums = tab.diagonal_sums();
        let r = vanishing_and_containment(&sums, &arr, VanishMode::Exact).unwrap();
        assert!(r.ok);
        let r = vanishing_and_containment(&sums, &arr, VanishMode::Gf2Exhaustive).unwrap();
        assert!(r.ok);
        let r = vanishing_and_containment(
            &sums,
            &arr,
            VanishMode::GfSample {
                p: 101,
                count: 10_000,
                seed: 7,
            },
        )
        .unwrap();
        assert!(r.ok);
    }

    #[test]
    fn tampered_sum_is_caught() {
        let arr = example_one();
        let dec = decompose(&arr).unwrap();
        let tab = build_tableau(&dec).unwrap();
        let mut sums = tab.diagonal_sums();
        // Drop one term of the last diagonal sum: the remaining system
        // acquires common zeros off the arrangement.
        let entry = tab.lines().pop().unwrap().pop().unwrap();
        let k = sums.len() - 1;
        sums[k] = sums[k].sub(&entry.poly(&tab.vars));
        let err =
            vanishing_and_containment(&sums, &arr, VanishMode::Gf2Exhaustive).unwrap_err();
        assert!(matches!(err, OracleError::CounterexamplePoint(_)));
    }
}
