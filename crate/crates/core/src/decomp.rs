//! The decomposition chain of a linearly joined arrangement: running
//! intersections D_i, the complements Delta_i and P_i, the axiom certificate,
//! and the quadric generating sets of the intersection ideal.

use crate::arrangement::Arrangement;
use crate::exactlin::{linear_ideal_reduce, LinearSpace};
use crate::poly::Poly;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DecompError {
    #[error("axiom {axiom}) violated at step k = {k}")]
    AxiomViolation { k: usize, axiom: char },
}

/// Which of the six axioms of the structure theorem the input satisfies.
/// Axioms a)-c) are structural (true by construction), d) and e) constrain
/// the extra generators, f) is the intersection-containment condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCertificate {
    pub axioms: [bool; 6],
}

impl AxiomCertificate {
    pub fn all_hold(&self) -> bool {
        self.axioms.iter().all(|&b| b)
    }

    pub fn first_failure(&self) -> Option<char> {
        self.axioms
            .iter()
            .position(|&b| !b)
            .map(|i| (b'a' + i as u8) as char)
    }
}

/// D_i = intersection of Q_1..Q_i; D_{i-1} = D_i (+) Delta_i;
/// Q_i = P_i (+) D_i.  All lists are 0-based: `d[i]` is D_{i+1}, `delta[0]`
/// and `p[0]` are the zero spaces Delta_1 and P_1.
#[derive(Debug, Clone)]
pub struct LJDecomposition {
    pub vars: Vec<String>,
    pub d: Vec<LinearSpace>,
    pub delta: Vec<LinearSpace>,
    pub p: Vec<LinearSpace>,
    pub d_tail: LinearSpace,
    pub certificate: AxiomCertificate,
}

impl LJDecomposition {
    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// D_{j,k} = Delta_{j+1} (+) ... (+) Delta_k (1-based j <= k).
    pub fn d_view(&self, j: usize, k: usize) -> LinearSpace {
        let mut out = LinearSpace::zero(&self.vars);
        for i in j + 1..=k {
            out = out.sum(&self.delta[i - 1]).unwrap();
        }
        out
    }

    /// Q_{j,k} = P_j (+) D_{j,k}: the ideal of L_j inside the span of
    /// L_1 ... L_k (1-based).
    pub fn reduced_q(&self, j: usize, k: usize) -> LinearSpace {
        self.p[j - 1].sum(&self.d_view(j, k)).unwrap()
    }

    /// Generators of the intersection of the linear ideals (Q_1)..(Q_k):
    /// all products d*p with d in Delta_j, p in P_j for 2 <= j <= k, plus the
    /// basis of D_k as linear generators (for k = l this is D_tail).
    pub fn quadric_generators(&self, k: usize) -> Vec<Poly> {
        assert!(1 <= k && k <= self.len());
        let mut out = Vec::new();
        for j in 2..=k {
            for d in &self.delta[j - 1].basis {
                for p in &self.p[j - 1].basis {
                    out.push(d.to_poly(&self.vars).mul(&p.to_poly(&self.vars)));
                }
            }
        }
        for v in &self.d[k - 1].basis {
            out.push(v.to_poly(&self.vars));
        }
        out
    }
}

/// Compute the decomposition of an arrangement whose order passed
/// check_order, and re-verify all six axioms on the result.
pub fn decompose(arr: &Arrangement) -> Result<LJDecomposition, DecompError> {
    let l = arr.len();
    let vars = arr.vars.clone();
    let d = arr.running_intersections();
    let mut delta = vec![LinearSpace::zero(&vars)];
    let mut p = vec![LinearSpace::zero(&vars)];
    for i in 1..l {
        delta.push(d[i].complement_in(&d[i - 1]).unwrap());
        p.push(d[i].complement_in(&arr.components[i].linear_part).unwrap());
    }
    let d_tail = d[l - 1].clone();
    let mut dec = LJDecomposition {
        vars,
        d,
        delta,
        p,
        d_tail,
        certificate: AxiomCertificate { axioms: [true; 6] },
    };
    dec.certificate = verify_axioms(arr, &dec)?;
    Ok(dec)
}

fn verify_axioms(arr: &Arrangement, dec: &LJDecomposition) -> Result<AxiomCertificate, DecompError> {
    let l = arr.len();
    let fail = |k: usize, axiom: char| DecompError::AxiomViolation { k, axiom };

    // a) J_i = (M_i, Q_i): structural (components are stored that way).
    // b) Q_i = P_i (+) D_i, direct.
    for i in 0..l {
        let q = &arr.components[i].linear_part;
        let s = dec.p[i].sum(&dec.d[i]).unwrap();
        if s.basis != q.basis || dec.p[i].dim() + dec.d[i].dim() != q.dim() {
            return Err(fail(i + 1, 'b'));
        }
    }
    // c) D_1 >= D_2 >= ... >= D_l.
    for i in 1..l {
        if !dec.d[i - 1].contains_space(&dec.d[i]) {
            return Err(fail(i + 1, 'c'));
        }
    }
    // d) M_i inside (D_{i-1}) for i >= 2.
    for i in 1..l {
        for g in &arr.components[i].extra_gens {
            if !linear_ideal_reduce(g, &dec.d[i - 1]).is_zero() {
                return Err(fail(i + 1, 'd'));
            }
        }
    }
    // e) M_i inside (P_j) for i < j.
    for i in 0..l.saturating_sub(1) {
        for g in &arr.components[i].extra_gens {
            for pj in dec.p.iter().skip(i + 1) {
                if !linear_ideal_reduce(g, pj).is_zero() {
                    return Err(fail(i + 1, 'e'));
                }
            }
        }
    }
    // f) intersection of (Q_1)..(Q_{k-1}) inside (P_k, D_{k-1}): by the
    // generator description it suffices that every product from Delta_j x P_j
    // (j < k) has a factor in P_k + D_{k-1} (D_{k-1} generators are inside
    // automatically).
    for k in 2..=l {
        let target = dec.p[k - 1].sum(&dec.d[k - 2]).unwrap();
        for j in 2..k {
            for dv in &dec.delta[j - 1].basis {
                for pv in &dec.p[j - 1].basis {
                    if !target.contains_vec(dv) && !target.contains_vec(pv) {
                        return Err(fail(k, 'f'));
                    }
                }
            }
        }
    }
    Ok(AxiomCertificate { axioms: [true; 6] })
}

/// Generators of the intersection J_1 cap ... cap J_k: the extra generators
/// of the first k components together with the quadric generators.
pub fn intersection_generators(arr: &Arrangement, dec: &LJDecomposition, k: usize) -> Vec<Poly> {
    let mut out: Vec<Poly> = arr
        .components
        .iter()
        .take(k)
        .flat_map(|c| c.extra_gens.iter().cloned())
        .collect();
    out.extend(dec.quadric_generators(k));
    out
}
