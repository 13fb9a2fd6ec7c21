//! Sparse multivariate polynomials with exact rational coefficients.

use crate::Rat;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
}

/// Polynomial as a map from exponent vectors to nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub vars: Vec<String>,
    pub terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(vars: &[String]) -> Poly {
        Poly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: Rat) -> Poly {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn var(vars: &[String], i: usize) -> Poly {
        let mut e = vec![0u32; vars.len()];
        e[i] = 1;
        let mut p = Poly::zero(vars);
        p.terms.insert(e, Rat::one());
        p
    }

    pub fn monomial(vars: &[String], exps: Vec<u32>, c: Rat) -> Poly {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_linear(vars: &[String], coeffs: &[Rat]) -> Poly {
        let mut p = Poly::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u32; vars.len()];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    /// If the polynomial is homogeneous linear, return its coefficient vector.
    pub fn as_linear_form(&self) -> Option<crate::LinForm> {
        let mut coeffs = vec![Rat::zero(); self.vars.len()];
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() != 1 {
                return None;
            }
            let i = e.iter().position(|&x| x == 1).unwrap();
            coeffs[i] = c.clone();
        }
        Some(crate::LinForm { coeffs })
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut acc = Poly::constant(&self.vars, Rat::one());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Ring homomorphism: replace variable `i` by `subst(i)` when given,
    /// leave it alone otherwise.
    pub fn substitute(&self, subst: impl Fn(usize) -> Option<Poly>) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(&self.vars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                match subst(i) {
                    Some(p) => term = term.mul(&p.pow(exp)),
                    None => {
                        let mut m = vec![0u32; self.vars.len()];
                        m[i] = exp;
                        term = term.mul(&Poly::monomial(&self.vars, m, Rat::one()));
                    }
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluate over GF(p) given coordinates in 0..p.
    pub fn eval_gf(&self, point: &[u64], p: u64) -> u64 {
        let mut acc: u64 = 0;
        for (e, c) in &self.terms {
            let mut t = rat_mod(c, p);
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t = t * point[i] % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Support of a monomial polynomial (single square-free term) as variable
    /// indices; None if not of that shape.
    pub fn monomial_support(&self) -> Option<Vec<usize>> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, _) = self.terms.iter().next().unwrap();
        if e.iter().any(|&x| x > 1) {
            return None;
        }
        Some(
            e.iter()
                .enumerate()
                .filter(|(_, &x)| x == 1)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// Every term contains at least one variable from `var_set`?
    /// This decides membership in the ideal generated by those variables.
    pub fn in_variable_ideal(&self, var_set: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|e| var_set.iter().any(|&i| e[i] > 0))
    }

    pub fn parse(vars: &[String], input: &str) -> Result<Poly, PolyError> {
        Parser {
            vars,
            bytes: input.as_bytes(),
            pos: 0,
        }
        .parse_full()
    }
}

fn rat_mod(c: &Rat, p: u64) -> u64 {
    use num_bigint::BigInt;
    let pb = BigInt::from(p);
    let num = ((c.numer() % &pb) + &pb) % &pb;
    let den = ((c.denom() % &pb) + &pb) % &pb;
    let num: u64 = num.try_into().unwrap();
    let den: u64 = den.try_into().unwrap();
    assert!(den != 0, "denominator divisible by {p}");
    num * mod_inv(den, p) % p
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

// Term order for printing: degrevlex with the ambient variable order.
fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {}
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| degrevlex(b, a));
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            let mut wrote = false;
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                wrote = true;
            }
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars[i])?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    vars: &'a [String],
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse_full(mut self) -> Result<Poly, PolyError> {
        let p = self.parse_expr()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn parse_expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.parse_term()?.neg()
            }
            _ => self.parse_term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.parse_factor()?);
                }
                // implicit multiplication before '(' or an identifier
                Some(b'(') => acc = acc.mul(&self.parse_factor()?),
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    acc = acc.mul(&self.parse_factor()?)
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Poly, PolyError> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_integer()?;
                let mut r = Rat::from_integer(n.into());
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.parse_integer()?;
                    if d == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    r /= Rat::from_integer(d.into());
                }
                Poly::constant(self.vars, r)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.parse_ident();
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| PolyError::UnknownVar(name.clone()))?;
                Poly::var(self.vars, i)
            }
            _ => return Err(self.err("expected factor")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.parse_integer()?;
            if e < 0 {
                return Err(self.err("negative exponent"));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn parse_integer(&mut self) -> Result<i64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn parse_ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }
}
