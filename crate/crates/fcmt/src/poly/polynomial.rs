//! Sparse polynomials in `x, y, t` over a number field.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::field::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::json::rational_string;

pub const VARIABLES: [&str; 3] = ["x", "y", "t"];

/// Exponents of `x, y, t`, ordered graded reverse lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial([other.0[0] - self.0[0], other.0[1] - self.0[1], other.0[2] - self.0[2]])
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] == 0 || other.0[i] == 0)
    }

    fn render(&self) -> String {
        let parts: Vec<String> = (0..3)
            .filter(|&i| self.0[i] > 0)
            .map(|i| match self.0[i] {
                1 => VARIABLES[i].to_string(),
                e => format!("{}^{e}", VARIABLES[i]),
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..3).rev() {
                match self.0[i].cmp(&other.0[i]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// No zero coefficients are stored. Coefficient vectors have the dimension
/// of the field the polynomial was built over; arithmetic takes that field
/// as an argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        Polynomial::term(Monomial::ONE, c)
    }

    pub fn from_int(c: i64, k: &NumberField) -> Polynomial {
        Polynomial::constant(k.from_int(c))
    }

    pub fn term(m: Monomial, c: FieldElement) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(i: usize, k: &NumberField) -> Polynomial {
        Polynomial::term(Monomial::var(i), k.one())
    }

    pub fn x(k: &NumberField) -> Polynomial {
        Polynomial::var(0, k)
    }

    pub fn y(k: &NumberField) -> Polynomial {
        Polynomial::var(1, k)
    }

    pub fn t(k: &NumberField) -> Polynomial {
        Polynomial::var(2, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn constant_term(&self) -> Option<&FieldElement> {
        self.terms.get(&Monomial::ONE)
    }

    /// Whether only `t` occurs.
    pub fn is_univariate_in_t(&self) -> bool {
        self.terms.keys().all(|m| m.0[0] == 0 && m.0[1] == 0)
    }

    fn add_term(&mut self, m: Monomial, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = e.add(c);
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(*m, c);
        }
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement, k: &NumberField) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (*m, k.mul(c, d))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement, k: &NumberField) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, d)| (m.mul(n), k.mul(c, d))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, k: &NumberField) -> Polynomial {
        let mut r = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                r.add_term(m.mul(n), &k.mul(c, d));
            }
        }
        r
    }

    pub fn pow(&self, e: u32, k: &NumberField) -> Polynomial {
        let mut r = Polynomial::from_int(1, k);
        for _ in 0..e {
            r = r.mul(self, k);
        }
        r
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, k: &NumberField) -> Polynomial {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&k.inv(c).expect("nonzero"), k),
            _ => self.clone(),
        }
    }

    /// Substitutes `values[i]` for the `i`-th variable.
    pub fn substitute(&self, values: &[Polynomial; 3], k: &NumberField) -> Polynomial {
        let mut powers: [Vec<Polynomial>; 3] = Default::default();
        let mut r = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for i in 0..3 {
                let e = m.0[i] as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = match powers[i].last() {
                        None => Polynomial::from_int(1, k),
                        Some(p) => p.mul(&values[i], k),
                    };
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e], k);
            }
            r = r.add(&term);
        }
        r
    }

    pub fn to_string(&self, k: &NumberField) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let single = self.terms.len() == 1;
        let mut s = String::new();
        for (m, c) in self.terms() {
            let nonzero: Vec<usize> = (0..c.0.len()).filter(|&i| !c.0[i].is_zero()).collect();
            let (negative, mag) = if nonzero.len() == 1 {
                let i = nonzero[0];
                let name = &k.basis_names()[i];
                let a = c.0[i].abs();
                let mag = match (name.as_str(), a == num_traits::One::one()) {
                    ("1", _) => rational_string(&a),
                    (_, true) => name.clone(),
                    _ => format!("{}*{name}", rational_string(&a)),
                };
                (c.0[i].is_negative(), mag)
            } else if single && *m == Monomial::ONE {
                (false, k.format(c))
            } else {
                (false, format!("({})", k.format(c)))
            };
            if s.is_empty() {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.render();
            if mono.is_empty() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&mag);
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    /// Parses expressions such as `x^2*y - 2*xi^2*y^6` or `(x - y)*(xi*y + x)/3`.
    pub fn parse(src: &str, k: &NumberField) -> Result<Polynomial> {
        let mut p = Parser { src, pos: 0, k };
        p.skip_ws();
        if p.pos == src.len() {
            return Err(Error::parse_at(src, 0, "empty polynomial"));
        }
        let r = p.expr()?;
        p.skip_ws();
        if p.pos < src.len() {
            return Err(Error::parse_at(src, p.pos, format!("unexpected {:?}", p.peek().unwrap())));
        }
        Ok(r)
    }
}

impl Ord for Polynomial {
    /// Compares term lists from the leading term down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms().cmp(other.terms())
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    k: &'a NumberField,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse_at(self.src, self.pos, msg)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?, self.k);
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.factor()?;
                let c = match (d.num_terms(), d.constant_term()) {
                    (1, Some(c)) => c.clone(),
                    _ => return Err(Error::parse_at(self.src, at, "division only by nonzero constants")),
                };
                acc = acc.scale(&self.k.inv(&c).expect("nonzero"), self.k);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        if self.eat('+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e, self.k));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<num_bigint::BigUint> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let r = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(r)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Polynomial::constant(
                    self.k.from_rational(num_rational::BigRational::from_integer(n.into())),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                if let Some(i) = VARIABLES.iter().position(|v| *v == name) {
                    return Ok(Polynomial::var(i, self.k));
                }
                match self.k.generator(name) {
                    Some(g) => Ok(Polynomial::constant(g.clone())),
                    None => Err(Error::parse_at(
                        self.src,
                        start,
                        format!("unknown symbol {name:?} (field {})", self.k),
                    )),
                }
            }
            Some(c) => Err(self.err(format!("unexpected {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn k2() -> NumberField {
        NumberField::quadratic(q(2)).unwrap()
    }

    #[test]
    fn grevlex() {
        let m = |a, b, c| Monomial([a, b, c]);
        assert!(m(2, 0, 0) > m(1, 1, 0));
        assert!(m(1, 1, 0) > m(0, 2, 0));
        assert!(m(0, 3, 0) > m(2, 0, 0));
        assert!(m(1, 0, 1) < m(0, 2, 0));
        let mut v = vec![m(0, 0, 1), m(1, 0, 0), m(0, 1, 0)];
        v.sort();
        assert_eq!(v, vec![m(0, 0, 1), m(0, 1, 0), m(1, 0, 0)]);
    }

    #[test]
    fn parse_and_print() {
        let k = k2();
        let p = Polynomial::parse("x^2*y - 2*xi^2*y^6", &k).unwrap();
        assert_eq!(p.to_string(&k), "-4*y^6 + x^2*y");
        let f = Polynomial::parse("(x - y)*(xi^2*y^4 - x^2)", &k).unwrap();
        assert_eq!(f.to_string(&k), "2*x*y^4 - 2*y^5 - x^3 + x^2*y");
        let g = Polynomial::parse("1/2*x + xi*y - 3/4", &k).unwrap();
        assert_eq!(g.to_string(&k), "1/2*x + xi*y - 3/4");
        assert_eq!(Polynomial::parse(&g.to_string(&k), &k).unwrap(), g);
        let h = Polynomial::parse("(1 + xi)*x", &k).unwrap();
        assert_eq!(h.to_string(&k), "(1 + xi)*x");
        assert_eq!(Polynomial::parse("x - x", &k).unwrap().to_string(&k), "0");
    }

    #[test]
    fn parse_errors_locate() {
        let k = k2();
        match Polynomial::parse("x + z", &k) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(Polynomial::parse("x/y", &k).is_err());
        assert!(Polynomial::parse("(x", &k).is_err());
        assert!(Polynomial::parse("", &k).is_err());
        assert!(Polynomial::parse("x y", &k).is_err());
    }

    #[test]
    fn substitution() {
        let k = k2();
        let f = Polynomial::parse("x^2 - xi^2*y^6", &k).unwrap();
        let t = Polynomial::t(&k);
        let branch = [Polynomial::parse("xi*t^3", &k).unwrap(), t.clone(), t];
        assert!(f.substitute(&branch, &k).is_zero());
    }
}
