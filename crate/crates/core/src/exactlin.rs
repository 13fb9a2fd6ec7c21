//! Exact rational linear algebra over the space of linear forms.
//!
//! Every direct sum, intersection, sum and complement choice made elsewhere in
//! the crate bottoms out here, deterministically: bases are kept in reduced
//! row-echelon form with respect to the ambient variable order, and the
//! complement of a subspace is the pivot-exclusion complement.

use crate::poly::Poly;
use crate::Rat;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinError {
    #[error("ambient variable lists differ: {0:?} vs {1:?}")]
    Ambient(Vec<String>, Vec<String>),
    #[error("complement requested but the first space is not contained in the second")]
    NotASubspace,
}

/// A linear form, stored as a dense coefficient vector over a fixed ambient
/// variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinForm {
    pub coeffs: Vec<Rat>,
}

impl LinForm {
    pub fn zero(n: usize) -> Self {
        LinForm {
            coeffs: vec![Rat::zero(); n],
        }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut f = Self::zero(n);
        f.coeffs[i] = Rat::one();
        f
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn leading_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    pub fn normalized(&self) -> LinForm {
        match self.leading_index() {
            None => self.clone(),
            Some(i) => {
                let lead = self.coeffs[i].clone();
                LinForm {
                    coeffs: self.coeffs.iter().map(|c| c / &lead).collect(),
                }
            }
        }
    }

    /// Nonzero scalar multiples of each other?
    pub fn proportional_to(&self, other: &LinForm) -> bool {
        !self.is_zero() && !other.is_zero() && self.normalized() == other.normalized()
    }

    pub fn to_poly(&self, vars: &[String]) -> Poly {
        Poly::from_linear(vars, &self.coeffs)
    }

    pub fn display<'a>(&'a self, vars: &'a [String]) -> LinFormDisplay<'a> {
        LinFormDisplay { form: self, vars }
    }
}

pub struct LinFormDisplay<'a> {
    form: &'a LinForm,
    vars: &'a [String],
}

impl fmt::Display for LinFormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form.to_poly(self.vars))
    }
}

/// A subspace of the space of linear forms, as a canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSpace {
    pub vars: Vec<String>,
    /// RREF rows: pivot columns strictly increasing, pivots 1, pivot columns
    /// otherwise zero.
    pub basis: Vec<LinForm>,
}

/// Bring `rows` into canonical RREF, dropping zero rows.
pub fn rref(mut rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let lead = rows[rank][col].clone();
        for c in col..ncols {
            let v = &rows[rank][c] / &lead;
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let v = &rows[r][c] - &factor * &rows[rank][c];
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

impl LinearSpace {
    pub fn span(vars: &[String], vectors: &[LinForm]) -> LinearSpace {
        let rows = rref(vectors.iter().map(|v| v.coeffs.clone()).collect());
        LinearSpace {
            vars: vars.to_vec(),
            basis: rows.into_iter().map(|coeffs| LinForm { coeffs }).collect(),
        }
    }

    pub fn zero(vars: &[String]) -> LinearSpace {
        LinearSpace {
            vars: vars.to_vec(),
            basis: vec![],
        }
    }

    pub fn full(vars: &[String]) -> LinearSpace {
        let n = vars.len();
        LinearSpace::span(vars, &(0..n).map(|i| LinForm::var(n, i)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .filter_map(|r| r.leading_index())
            .collect()
    }

    fn check_ambient(&self, other: &LinearSpace) -> Result<(), LinError> {
        if self.vars != other.vars {
            return Err(LinError::Ambient(self.vars.clone(), other.vars.clone()));
        }
        Ok(())
    }

    /// Reduce a vector modulo the RREF basis; the space contains the vector
    /// iff the residue is zero.
    pub fn residue(&self, v: &LinForm) -> LinForm {
        let mut w = v.clone();
        for row in &self.basis {
            let p = row.leading_index().unwrap();
            if !w.coeffs[p].is_zero() {
                let factor = w.coeffs[p].clone();
                for c in 0..w.coeffs.len() {
                    let val = &w.coeffs[c] - &factor * &row.coeffs[c];
                    w.coeffs[c] = val;
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &LinForm) -> bool {
        self.residue(v).is_zero()
    }

    pub fn contains_space(&self, other: &LinearSpace) -> bool {
        other.basis.iter().all(|v| self.contains_vec(v))
    }

    pub fn sum(&self, other: &LinearSpace) -> Result<LinearSpace, LinError> {
        self.check_ambient(other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Ok(LinearSpace::span(&self.vars, &vecs))
    }

    /// Kernel construction on stacked bases.
    pub fn intersect(&self, other: &LinearSpace) -> Result<LinearSpace, LinError> {
        self.check_ambient(other)?;
        let (ra, rb) = (self.dim(), other.dim());
        if ra == 0 || rb == 0 {
            return Ok(LinearSpace::zero(&self.vars));
        }
        // Solve  sum alpha_i a_i = sum beta_j b_j:  nullspace of [A^T | -B^T].
        let n = self.vars.len();
        let mut m: Vec<Vec<Rat>> = Vec::with_capacity(n);
        for c in 0..n {
            let mut row = Vec::with_capacity(ra + rb);
            for a in &self.basis {
                row.push(a.coeffs[c].clone());
            }
            for b in &other.basis {
                row.push(-b.coeffs[c].clone());
            }
            m.push(row);
        }
        let red = rref(m);
        // Free columns of the reduced system give the nullspace basis.
        let total = ra + rb;
        let piv: Vec<usize> = red
            .iter()
            .filter_map(|r| r.iter().position(|c| !c.is_zero()))
            .collect();
        let mut vectors = Vec::new();
        for free in (0..total).filter(|c| !piv.contains(c)) {
            let mut sol = vec![Rat::zero(); total];
            sol[free] = Rat::one();
            for (r, &p) in red.iter().zip(piv.iter()) {
                sol[p] = -r[free].clone();
            }
            // v = sum alpha_i a_i using the first ra coordinates.
            let mut v = LinForm::zero(n);
            for (i, a) in self.basis.iter().enumerate() {
                if !sol[i].is_zero() {
                    for c in 0..n {
                        let val = &v.coeffs[c] + &sol[i] * &a.coeffs[c];
                        v.coeffs[c] = val;
                    }
                }
            }
            vectors.push(v);
        }
        Ok(LinearSpace::span(&self.vars, &vectors))
    }

    /// Deterministic pivot-exclusion complement: the rows of `within` whose
    /// pivots are not pivots of `self`, so that `self (+) result = within`.
    pub fn complement_in(&self, within: &LinearSpace) -> Result<LinearSpace, LinError> {
        self.check_ambient(within)?;
        if !within.contains_space(self) {
            return Err(LinError::NotASubspace);
        }
        let own = self.pivots();
        let rows: Vec<LinForm> = within
            .basis
            .iter()
            .filter(|r| !own.contains(&r.leading_index().unwrap()))
            .cloned()
            .collect();
        let comp = LinearSpace {
            vars: self.vars.clone(),
            basis: rows,
        };
        debug_assert_eq!(comp.dim() + self.dim(), within.dim());
        Ok(comp)
    }

    /// Complete `chosen` (independent vectors of `self`) to a basis of `self`
    /// by pivot exclusion.
    pub fn complete_basis(&self, chosen: &[LinForm]) -> Vec<LinForm> {
        let chosen_span = LinearSpace::span(&self.vars, chosen);
        assert_eq!(chosen_span.dim(), chosen.len(), "chosen vectors dependent");
        let piv = chosen_span.pivots();
        let mut out = chosen.to_vec();
        for row in &self.basis {
            if !piv.contains(&row.leading_index().unwrap()) {
                out.push(row.clone());
            }
        }
        debug_assert_eq!(
            LinearSpace::span(&self.vars, &out).dim(),
            self.dim(),
            "completion failed"
        );
        out
    }
}

/// Normal form of `f` modulo the linear forms of `L`: substitute each pivot
/// variable by its negated non-pivot tail. `f` lies in the ideal `(L)` iff
/// the result is zero.
pub fn linear_ideal_reduce(f: &Poly, space: &LinearSpace) -> Poly {
    assert_eq!(f.vars, space.vars, "ambient mismatch in linear_ideal_reduce");
    let n = space.vars.len();
    // pivot var index -> substitution polynomial (the negated tail)
    let mut subst: Vec<Option<Poly>> = vec![None; n];
    for row in &space.basis {
        let p = row.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let mut tail = vec![Rat::zero(); n];
        for c in p + 1..n {
            tail[c] = -row.coeffs[c].clone();
        }
        subst[p] = Some(Poly::from_linear(&space.vars, &tail));
    }
    f.substitute(|i| subst[i].clone())
}

#[cfg(test)]
mod tests {
    use crate::rat;
    use super::*;
    use crate::poly::Poly;

    fn vars(names: &str) -> Vec<String> {
        names.split_whitespace().map(|s| s.to_string()).collect()
    }

    fn sp(vs: &[String], forms: &[&str]) -> LinearSpace {
        let vecs: Vec<LinForm> = forms
            .iter()
            .map(|f| Poly::parse(vs, f).unwrap().as_linear_form().unwrap())
            .collect();
        LinearSpace::span(vs, &vecs)
    }

    #[test]
    fn intersect_example_one_d2() {
        // intersect(<a,b,c>, <y,z,a,b>) = <a,b>, matching D_2 of the running
        // seven-variable example.
        let vs = vars("a b c x y z u");
        let a = sp(&vs, &["a", "b", "c"]);
        let b = sp(&vs, &["y", "z", "a", "b"]);
        let want = sp(&vs, &["a", "b"]);
        let got = a.intersect(&b).unwrap();
        assert_eq!(got, want);
        // brute-force oracle: a vector is in both iff reduced to zero by both
        for v in &got.basis {
            assert!(a.contains_vec(v) && b.contains_vec(v));
        }
        // dim identity check
        let s = a.sum(&b).unwrap();
        assert_eq!(a.dim() + b.dim(), got.dim() + s.dim());
    }

    #[test]
    fn complement_pivot_exclusion() {
        let vs = vars("a b c x y z u");
        let big = sp(&vs, &["x", "z-u", "b", "c"]);
        let small = sp(&vs, &["b"]);
        let comp = small.complement_in(&big).unwrap();
        let want = sp(&vs, &["x", "z-u", "c"]);
        assert_eq!(comp, want);
        // direct-sum rank check
        let s = small.sum(&comp).unwrap();
        assert_eq!(s, big);
        assert_eq!(small.intersect(&comp).unwrap().dim(), 0);
    }

    #[test]
    fn complement_not_a_subspace() {
        let vs = vars("a b c");
        let a = sp(&vs, &["a"]);
        let b = sp(&vs, &["b", "c"]);
        assert_eq!(a.complement_in(&b), Err(LinError::NotASubspace));
    }

    #[test]
    fn intersect_identity_and_sum_zero() {
        let vs = vars("a b c");
        let a = sp(&vs, &["a", "b-c"]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        let z = LinearSpace::zero(&vs);
        assert_eq!(a.sum(&z).unwrap(), a);
    }

    #[test]
    fn ambient_mismatch() {
        let a = sp(&vars("a b"), &["a"]);
        let b = sp(&vars("a c"), &["a"]);
        assert!(matches!(a.sum(&b), Err(LinError::Ambient(_, _))));
    }

    #[test]
    fn reduce_generator_multiple() {
        let vs = vars("a b c x y z u");
        let l = sp(&vs, &["a", "b", "c"]);
        let f = Poly::parse(&vs, "a*x").unwrap();
        assert!(linear_ideal_reduce(&f, &l).is_zero());
    }

    #[test]
    fn reduce_substitutes_tail() {
        let vs = vars("a b c x y z u");
        let l = sp(&vs, &["z-u"]);
        let f = Poly::parse(&vs, "x*z").unwrap();
        let want = Poly::parse(&vs, "x*u").unwrap();
        assert_eq!(linear_ideal_reduce(&f, &l), want);
    }

    #[test]
    fn reduce_example_two_entry() {
        let vs = vars("a b c x y z u");
        let l = sp(&vs, &["x-u", "y-u", "a", "c"]);
        let f = Poly::parse(&vs, "b*(y-u)").unwrap();
        assert!(linear_ideal_reduce(&f, &l).is_zero());
    }

    #[test]
    fn reduce_matches_random_point_evaluation() {
        // f in (L) iff f vanishes on the zero set of L; sample points of the
        // zero set by choosing free coordinates and solving for pivots.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let vs = vars("a b c d");
        let l = sp(&vs, &["a-b", "c+d"]);
        let f = Poly::parse(&vs, "a*c + b*d - a*d - b*c + a - b").unwrap();
        let red = linear_ideal_reduce(&f, &l);
        assert!(red.is_zero());
        for _ in 0..50 {
            // free vars are b and d; a = b, c = -d
            let b = rat(rng.gen_range(-20i64..20));
            let d = rat(rng.gen_range(-20i64..20));
            let point = vec![b.clone(), b, -d.clone(), d];
            assert!(f.eval(&point).is_zero());
        }
    }
}
