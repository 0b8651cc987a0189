//! Truncated formal deformations of the polynomial algebra `k[x1, x2]`:
//! constant-coefficient bidifferential operators, twists given as `ħ`-series
//! of such operators, and the star products they induce.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, LiteralError, Result};
use crate::scalar::Scalar;

/// Exponent pair `(a, b)` for `x1^a x2^b` or `∂1^a ∂2^b`.
pub type Exp = (u32, u32);

/// Polynomial in `x1`, `x2` with no zero coefficients stored. Serialized
/// as its expression string.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exp, Scalar>,
}

impl Poly {
    pub fn constant(c: Scalar) -> Self {
        Self::monomial((0, 0), c)
    }

    pub fn x1() -> Self {
        Self::monomial((1, 0), Scalar::one())
    }

    pub fn x2() -> Self {
        Self::monomial((0, 1), Scalar::one())
    }

    pub fn monomial(exp: Exp, c: Scalar) -> Self {
        let mut p = Self::default();
        p.add_term(exp, c);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Exp, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, exp: Exp) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, exp: Exp, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::default();
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `∂1^a ∂2^b`.
    pub fn derivative(&self, (a, b): Exp) -> Self {
        let mut out = Self::default();
        for (&(p, q), c) in &self.terms {
            if p < a || q < b {
                continue;
            }
            let f = falling(p, a) * falling(q, b);
            out.add_term((p - a, q - b), c * &Scalar::from_int(f));
        }
        out
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }
}

/// `p (p-1) ... (p-a+1)`.
fn falling(p: u32, a: u32) -> i64 {
    (0..a).map(|k| (p - k) as i64).product()
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

impl Zero for Poly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Self::constant(Scalar::one())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::default();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, (a, b): Exp) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x1", a), ("x2", b)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Sign of the real part, or of the imaginary part for pure imaginaries.
fn leading_sign(c: &Scalar) -> i32 {
    let lead = if c.re().is_zero() { c.im() } else { c.re() };
    if lead.is_negative() {
        -1
    } else {
        1
    }
}

/// Parenthesized only when both parts are nonzero.
fn coefficient(c: &Scalar) -> String {
    if c.re().is_zero() || c.is_real() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// Highest degree first; coefficients with nonzero real and imaginary parts
/// are parenthesized so the output parses back with [`parse_poly`].
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&Exp, &Scalar)> = self.terms.iter().collect();
        ordered.sort_by(|(x, _), (y, _)| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        for (k, (&exp, c)) in ordered.into_iter().enumerate() {
            let negative = leading_sign(c) < 0;
            let magnitude = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = exp == (0, 0);
            if constant || !magnitude.is_one() {
                f.write_str(&coefficient(&magnitude))?;
                if !constant {
                    f.write_str("*")?;
                }
            }
            write_monomial(f, exp)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_poly(&s).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

/// Parse `+ - * ^ ( )`, `x1`, `x2`, `i` and literals `p` or `p/q`.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let mut p = Parser { src, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Literal(LiteralError {
            literal: self.src.to_string(),
            position: self.pos,
            message: message.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let n = self.integer()?;
            let n = u32::try_from(n).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        self.src[start..self.pos].parse().map_err(|_| self.error("integer too large"))
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            return Ok(inner);
        }
        if rest.starts_with("x1") || rest.starts_with("x2") {
            self.pos += 2;
            return Ok(if rest.starts_with("x1") { Poly::x1() } else { Poly::x2() });
        }
        if rest.starts_with('i') {
            self.pos += 1;
            return Ok(Poly::constant(Scalar::i()));
        }
        if rest.starts_with(|c: char| c.is_ascii_digit()) {
            let start = self.pos;
            self.integer()?;
            // p/q is one literal
            let save = self.pos;
            if self.peek() == Some('/') {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.integer()?;
                } else {
                    self.pos = save;
                }
            }
            let lit: Scalar = self.src[start..self.pos].parse().map_err(|e: LiteralError| {
                Error::Literal(LiteralError {
                    literal: self.src.to_string(),
                    position: start + e.position,
                    message: e.message,
                })
            })?;
            return Ok(Poly::constant(lit));
        }
        Err(self.error("expected x1, x2, i, a number or '('"))
    }
}

/// `Σ c ∂^α ⊗ ∂^β` with constant coefficients.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<OpTerm>", from = "Vec<OpTerm>")]
pub struct BidiffOp {
    terms: BTreeMap<(Exp, Exp), Scalar>,
}

/// Serialized form of one term `coeff ∂^left ⊗ ∂^right`.
#[derive(Clone, Serialize, Deserialize)]
struct OpTerm {
    left: [u32; 2],
    right: [u32; 2],
    coeff: Scalar,
}

impl From<BidiffOp> for Vec<OpTerm> {
    fn from(op: BidiffOp) -> Self {
        op.terms
            .into_iter()
            .map(|((a, b), coeff)| OpTerm {
                left: [a.0, a.1],
                right: [b.0, b.1],
                coeff,
            })
            .collect()
    }
}

impl From<Vec<OpTerm>> for BidiffOp {
    fn from(terms: Vec<OpTerm>) -> Self {
        let mut op = BidiffOp::default();
        for t in terms {
            op.add_term((t.left[0], t.left[1]), (t.right[0], t.right[1]), t.coeff);
        }
        op
    }
}

impl BidiffOp {
    pub fn identity() -> Self {
        Self::term((0, 0), (0, 0), Scalar::one())
    }

    pub fn term(alpha: Exp, beta: Exp, c: Scalar) -> Self {
        let mut out = Self::default();
        out.add_term(alpha, beta, c);
        out
    }

    /// `∂1⊗∂2 − ∂2⊗∂1`.
    pub fn wedge12() -> Self {
        &Self::term((1, 0), (0, 1), Scalar::one()) - &Self::term((0, 1), (1, 0), Scalar::one())
    }

    pub fn terms(&self) -> &BTreeMap<(Exp, Exp), Scalar> {
        &self.terms
    }

    fn add_term(&mut self, alpha: Exp, beta: Exp, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (alpha, beta);
        let slot = self.terms.entry(key).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::default();
        for (&(a, b), x) in &self.terms {
            out.add_term(a, b, x * c);
        }
        out
    }

    /// `σ(∂^α ⊗ ∂^β) = ∂^β ⊗ ∂^α`.
    pub fn braid(&self) -> Self {
        let mut out = Self::default();
        for (&(a, b), x) in &self.terms {
            out.add_term(b, a, x.clone());
        }
        out
    }

    /// `m(op ▷ (f⊗g))`.
    pub fn apply(&self, f: &Poly, g: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&(a, b), c) in &self.terms {
            let fa = f.derivative(a);
            if fa.is_zero() {
                continue;
            }
            out = &out + &(&fa * &g.derivative(b)).scale(c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| &acc * self)
    }
}

impl Zero for BidiffOp {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for BidiffOp {
    type Output = BidiffOp;
    fn add(self, rhs: BidiffOp) -> BidiffOp {
        &self + &rhs
    }
}

impl Add<&BidiffOp> for &BidiffOp {
    type Output = BidiffOp;
    fn add(self, rhs: &BidiffOp) -> BidiffOp {
        let mut out = self.clone();
        for (&(a, b), x) in &rhs.terms {
            out.add_term(a, b, x.clone());
        }
        out
    }
}

impl Sub<&BidiffOp> for &BidiffOp {
    type Output = BidiffOp;
    fn sub(self, rhs: &BidiffOp) -> BidiffOp {
        self + &rhs.scale(&-Scalar::one())
    }
}

/// Composition; constant-coefficient operators commute.
impl Mul<&BidiffOp> for &BidiffOp {
    type Output = BidiffOp;
    fn mul(self, rhs: &BidiffOp) -> BidiffOp {
        let mut out = BidiffOp::default();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a.0 + c.0, a.1 + c.1), (b.0 + d.0, b.1 + d.1), x * y);
            }
        }
        out
    }
}

impl fmt::Display for BidiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let d = |(a, b): Exp| -> String {
            let mut parts = Vec::new();
            for (name, e) in [("d1", a), ("d2", b)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("*")
            }
        };
        for (k, (&(a, b), c)) in self.terms.iter().enumerate() {
            let negative = leading_sign(c) < 0;
            let magnitude = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{}*", coefficient(&magnitude))?;
            }
            write!(f, "{}⊗{}", d(a), d(b))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BidiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Σ_{r ≤ order} ħ^r coeffs[r]`, arithmetic truncated at `ħ^order`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HbarSeries<T> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Zero + Clone> HbarSeries<T> {
    /// Pads with zeros or truncates to `order + 1` coefficients.
    pub fn new(order: usize, mut coeffs: Vec<T>) -> Self {
        coeffs.resize(order + 1, T::zero());
        Self { order, coeffs }
    }

    pub fn constant(order: usize, c: T) -> Self {
        Self::new(order, vec![c])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> &T {
        &self.coeffs[r]
    }

    /// Lowest `r` with a nonzero coefficient (the `ħ`-adic valuation).
    pub fn lowest_nonzero_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.lowest_nonzero_order().is_none()
    }
}

impl<T> HbarSeries<T>
where
    T: Zero + Clone,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order.min(rhs.order);
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(T::zero(), |acc, j| &acc + &(&self.coeffs[j] * &rhs.coeffs[k - j]))
            })
            .collect();
        Self::new(n, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order.min(rhs.order);
        Self::new(n, (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }
}

impl fmt::Display for HbarSeries<Poly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match r {
                0 => write!(f, "({c})")?,
                1 => write!(f, "h*({c})")?,
                _ => write!(f, "h^{r}*({c})")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " mod h^{}", self.order + 1)
    }
}

/// A twist `F` and its inverse as truncated series of operators.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TwistSeries {
    f: HbarSeries<BidiffOp>,
    finv: HbarSeries<BidiffOp>,
}

impl TwistSeries {
    /// Checks `F₀ = 1` and `F·F⁻¹ = 1` up to the truncation order.
    pub fn new(f: HbarSeries<BidiffOp>, finv: HbarSeries<BidiffOp>) -> Result<Self> {
        if f.coeff(0) != &BidiffOp::identity() {
            return Err(Error::NotATwist("F is not the identity at order 0".into()));
        }
        let one = HbarSeries::constant(f.order(), BidiffOp::identity());
        if f.order() != finv.order() || f.mul(&finv) != one {
            return Err(Error::NotInvertible("F·F⁻¹ is not the identity".into()));
        }
        Ok(Self { f, finv })
    }

    /// Inverse by `J₀ = 1`, `J_i = −Σ_{j=1..i} F_j J_{i−j}`.
    pub fn from_f(f: HbarSeries<BidiffOp>) -> Result<Self> {
        if f.coeff(0) != &BidiffOp::identity() {
            return Err(Error::NotATwist("F is not the identity at order 0".into()));
        }
        let mut j: Vec<BidiffOp> = vec![BidiffOp::identity()];
        for i in 1..=f.order() {
            let s = (1..=i).fold(BidiffOp::zero(), |acc, k| &acc + &(f.coeff(k) * &j[i - k]));
            j.push(s.scale(&-Scalar::one()));
        }
        let finv = HbarSeries::new(f.order(), j);
        Self::new(f, finv)
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    pub fn f(&self) -> &HbarSeries<BidiffOp> {
        &self.f
    }

    pub fn finv(&self) -> &HbarSeries<BidiffOp> {
        &self.finv
    }

    pub fn trivial(order: usize) -> Self {
        let one = HbarSeries::constant(order, BidiffOp::identity());
        Self {
            f: one.clone(),
            finv: one,
        }
    }
}

/// `Σ_{k ≤ order} (cħ)^k X^k / k!`.
fn exp_series(c: &Scalar, x: &BidiffOp, order: usize) -> HbarSeries<BidiffOp> {
    let coeffs = (0..=order as u32)
        .map(|k| x.pow(k).scale(&(c.pow(k) / Scalar::from_int(factorial(k)))))
        .collect();
    HbarSeries::new(order, coeffs)
}

/// `F = exp(−cħX)`, `F⁻¹ = exp(cħX)` with `X = ∂1⊗∂2 − ∂2⊗∂1`.
pub fn moyal_twist(c: &Scalar, order: usize) -> Result<TwistSeries> {
    if order == 0 {
        return Err(Error::UnsupportedDegree(0, "order >= 1"));
    }
    let x = BidiffOp::wedge12();
    TwistSeries::new(exp_series(&-c, &x, order), exp_series(c, &x, order))
}

/// `f ⋆ g = Σ_r ħ^r m(F⁻¹_r ▷ (f⊗g))`.
pub fn twist_product(t: &TwistSeries, f: &Poly, g: &Poly) -> HbarSeries<Poly> {
    let coeffs = t.finv().coeffs().iter().map(|op| op.apply(f, g)).collect();
    HbarSeries::new(t.order(), coeffs)
}

/// The star product extended `ħ`-bilinearly to series.
pub fn star(t: &TwistSeries, a: &HbarSeries<Poly>, b: &HbarSeries<Poly>) -> HbarSeries<Poly> {
    let n = t.order().min(a.order()).min(b.order());
    let mut coeffs = vec![Poly::zero(); n + 1];
    for (r, op) in t.finv().coeffs().iter().enumerate().take(n + 1) {
        for s in 0..=n - r {
            if a.coeff(s).is_zero() {
                continue;
            }
            for u in 0..=n - r - s {
                coeffs[r + s + u] = &coeffs[r + s + u] + &op.apply(a.coeff(s), b.coeff(u));
            }
        }
    }
    HbarSeries::new(n, coeffs)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AssociativityReport {
    pub passed: bool,
    pub order: usize,
    /// `(f⋆g)⋆h − f⋆(g⋆h)` up to the truncation order.
    pub residual: HbarSeries<Poly>,
    pub lowest_failing_order: Option<usize>,
}

pub fn check_associativity(t: &TwistSeries, f: &Poly, g: &Poly, h: &Poly) -> AssociativityReport {
    let n = t.order();
    let lift = |p: &Poly| HbarSeries::constant(n, p.clone());
    let left = star(t, &twist_product(t, f, g), &lift(h));
    let right = star(t, &lift(f), &twist_product(t, g, h));
    let residual = left.sub(&right);
    let lowest = residual.lowest_nonzero_order();
    AssociativityReport {
        passed: lowest.is_none(),
        order: n,
        residual,
        lowest_failing_order: lowest,
    }
}

/// `r = σ(F₁) − F₁`.
pub fn extract_rmatrix(t: &TwistSeries) -> Result<BidiffOp> {
    if t.order() < 1 {
        return Err(Error::UnsupportedDegree(0, "order >= 1"));
    }
    let f1 = t.f().coeff(1);
    Ok(&f1.braid() - f1)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PoissonReport {
    pub passed: bool,
    /// `C₁(f,g) − C₁(g,f)`.
    pub antisymmetrized: Poly,
    /// `m(r ▷ (f⊗g))`.
    pub from_r: Poly,
}

pub fn poisson_compatibility(t: &TwistSeries, f: &Poly, g: &Poly) -> Result<PoissonReport> {
    let r = extract_rmatrix(t)?;
    let c1 = t.finv().coeff(1);
    let antisymmetrized = &c1.apply(f, g) - &c1.apply(g, f);
    let from_r = r.apply(f, g);
    Ok(PoissonReport {
        passed: antisymmetrized == from_r,
        antisymmetrized,
        from_r,
    })
}

/// Weyl–Moyal product with `q = x1`, `p = x2`:
/// `Σ_{m,n} (iħ/2)^{m+n} (−1)^m/(m!n!) (∂_p^m ∂_q^n f)(∂_p^n ∂_q^m g)`,
/// truncated at `ħ^order`. Computed directly from the double sum.
pub fn weyl_moyal_reference(f: &Poly, g: &Poly, order: usize) -> HbarSeries<Poly> {
    let half_i = Scalar::i() * Scalar::frac(1, 2);
    let mut coeffs = vec![Poly::zero(); order + 1];
    for total in 0..=order as u32 {
        for m in 0..=total {
            let n = total - m;
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let c = half_i.pow(total) * Scalar::from_int(sign) / Scalar::from_int(factorial(m) * factorial(n));
            let term = &f.derivative((n, m)) * &g.derivative((m, n));
            coeffs[total as usize] = &coeffs[total as usize] + &term.scale(&c);
        }
    }
    HbarSeries::new(order, coeffs)
}

/// The parameter of [`moyal_twist`] that reproduces [`weyl_moyal_reference`].
pub fn weyl_moyal_parameter() -> Scalar {
    Scalar::i() * Scalar::frac(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("x1*x2"), Poly::monomial((1, 1), Scalar::one()));
        assert_eq!(p("(x1 + x2)^2"), p("x1^2 + 2*x1*x2 + x2^2"));
        assert_eq!(p("-x1^2"), Poly::monomial((2, 0), Scalar::from_int(-1)));
        assert_eq!(p("1/2*i*x1"), Poly::monomial((1, 0), Scalar::i() * Scalar::frac(1, 2)));
        assert_eq!(p("3 - 3"), Poly::zero());
        let q = p("x1^2*x2 - 3/4*x2 + (2 + i)*x1 + 5");
        assert_eq!(q.to_string(), "x1^2*x2 + (2+1*i)*x1 - 3/4*x2 + 5");
        assert_eq!(p(&q.to_string()), q);
        assert_eq!(p("i").to_string(), "1*i");
        assert_eq!(p("x1 - 1/2*i*x2").to_string(), "x1 - 1/2*i*x2");
        for bad in ["", "x3", "x1 +", "(x1", "x1^-1", "2/0", "x1 x2"] {
            assert!(parse_poly(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn parse_error_position() {
        match parse_poly("x1 + y") {
            Err(Error::Literal(e)) => assert_eq!(e.position, 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1^3*x2^2").derivative((2, 1)), p("12*x1*x2"));
        assert!(p("x1").derivative((0, 1)).is_zero());
    }

    #[test]
    fn moyal_examples() {
        let t = moyal_twist(&Scalar::zero(), 3).unwrap();
        assert_eq!(t, TwistSeries::trivial(3));
        let t = moyal_twist(&Scalar::i(), 1).unwrap();
        assert_eq!(t.f().coeff(1), &BidiffOp::wedge12().scale(&-Scalar::i()));
        let t = moyal_twist(&Scalar::i(), 2).unwrap();
        let one = HbarSeries::constant(2, BidiffOp::identity());
        assert_eq!(t.f().mul(t.finv()), one);
        assert_eq!(TwistSeries::from_f(t.f().clone()).unwrap(), t);
        assert!(moyal_twist(&Scalar::i(), 0).is_err());
    }

    #[test]
    fn product_examples() {
        let t = moyal_twist(&Scalar::i(), 4).unwrap();
        let prod = twist_product(&t, &Poly::x1(), &Poly::x2());
        assert_eq!(prod.coeff(0), &p("x1*x2"));
        assert_eq!(prod.coeff(1), &p("i"));
        assert!(prod.coeffs()[2..].iter().all(|c| c.is_zero()));
        let sq = twist_product(&t, &Poly::x1(), &Poly::x1());
        assert_eq!(sq, HbarSeries::constant(4, p("x1^2")));
        let f = p("x1^2*x2 + 3*x2");
        assert_eq!(twist_product(&t, &Poly::one(), &f), HbarSeries::constant(4, f.clone()));
        assert_eq!(twist_product(&t, &f, &Poly::one()), HbarSeries::constant(4, f));
    }

    #[test]
    fn commutator_of_coordinates() {
        let t = moyal_twist(&Scalar::i(), 3).unwrap();
        let c = twist_product(&t, &Poly::x1(), &Poly::x2()).sub(&twist_product(&t, &Poly::x2(), &Poly::x1()));
        let expected = HbarSeries::new(3, vec![Poly::zero(), p("2*i")]);
        assert_eq!(c, expected);
    }

    #[test]
    fn associativity_examples() {
        let t = moyal_twist(&Scalar::i(), 4).unwrap();
        assert!(check_associativity(&t, &Poly::x1(), &Poly::x2(), &p("x1*x2")).passed);
        let triv = TwistSeries::trivial(4);
        assert!(check_associativity(&triv, &p("x1^2"), &p("x2 + 1"), &p("x1*x2")).passed);
    }

    #[test]
    fn corrupted_twist_fails_at_order_two() {
        let good = moyal_twist(&Scalar::i(), 3).unwrap();
        let mut coeffs = good.f().coeffs().to_vec();
        coeffs[1] = BidiffOp::term((1, 0), (1, 0), Scalar::one());
        let bad = TwistSeries::from_f(HbarSeries::new(3, coeffs)).unwrap();
        let monomials = ["x1", "x2", "x1*x2", "x1^2", "x2^2"];
        let mut lowest = Vec::new();
        for a in monomials {
            for b in monomials {
                for c in monomials {
                    let r = check_associativity(&bad, &p(a), &p(b), &p(c));
                    if let Some(k) = r.lowest_failing_order {
                        lowest.push(k);
                    }
                }
            }
        }
        assert!(!lowest.is_empty());
        assert_eq!(lowest.iter().min(), Some(&2));
    }

    #[test]
    fn rmatrix_examples() {
        let t = moyal_twist(&Scalar::i(), 2).unwrap();
        let r = extract_rmatrix(&t).unwrap();
        assert_eq!(r, BidiffOp::wedge12().scale(&(Scalar::i() * Scalar::from_int(2))));
        assert_eq!(r.braid(), r.scale(&-Scalar::one()));
        assert!(extract_rmatrix(&TwistSeries::trivial(2)).unwrap().is_zero());
    }

    #[test]
    fn poisson_examples() {
        let t = moyal_twist(&Scalar::i(), 2).unwrap();
        let rep = poisson_compatibility(&t, &Poly::x1(), &Poly::x2()).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.from_r, p("2*i"));
        let f = p("x1^2 + x2");
        let rep = poisson_compatibility(&t, &f, &f).unwrap();
        assert!(rep.passed && rep.from_r.is_zero());
        let rep = poisson_compatibility(&TwistSeries::trivial(2), &f, &p("x1*x2")).unwrap();
        assert!(rep.passed && rep.antisymmetrized.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let t = moyal_twist(&Scalar::i(), 2).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<TwistSeries>(&text).unwrap(), t);
        let prod = twist_product(&t, &Poly::x1(), &Poly::x2());
        let text = serde_json::to_string(&prod).unwrap();
        assert!(text.contains("\"x1*x2\""), "{text}");
        assert_eq!(serde_json::from_str::<HbarSeries<Poly>>(&text).unwrap(), prod);
    }

    #[test]
    fn weyl_moyal_examples() {
        let q = Poly::x1();
        let pp = Poly::x2();
        let qp = weyl_moyal_reference(&q, &pp, 2);
        assert_eq!(qp.coeff(0), &p("x1*x2"));
        assert_eq!(qp.coeff(1), &p("1/2*i"));
        let pq = weyl_moyal_reference(&pp, &q, 2);
        assert_eq!(qp.sub(&pq), HbarSeries::new(2, vec![Poly::zero(), p("i")]));
    }

    #[test]
    fn weyl_moyal_matches_twist_under_parameter_map() {
        let t = moyal_twist(&weyl_moyal_parameter(), 4).unwrap();
        let f = p("x1^3 + 2*x1*x2^2");
        let g = p("x2^3 - x1^2*x2 + x1");
        assert_eq!(twist_product(&t, &f, &g), weyl_moyal_reference(&f, &g, 4));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(((0u32..=3, 0u32..=3), -3i64..=3), 0..4).prop_map(|terms| {
            terms
                .into_iter()
                .fold(Poly::zero(), |acc, (e, c)| &acc + &Poly::monomial(e, Scalar::from_int(c)))
        })
    }

    fn gaussian_poly() -> impl Strategy<Value = Poly> {
        let coeff = (-3i64..=3, 1i64..=3, -3i64..=3).prop_map(|(a, d, b)| Scalar::frac(a, d) + Scalar::from_int(b) * Scalar::i());
        proptest::collection::vec(((0u32..=3, 0u32..=3), coeff), 0..4)
            .prop_map(|terms| terms.into_iter().fold(Poly::zero(), |acc, (e, c)| &acc + &Poly::monomial(e, c)))
    }

    proptest! {
        #[test]
        fn classical_limit(f in small_poly(), g in small_poly()) {
            let t = moyal_twist(&Scalar::i(), 2).unwrap();
            let fg = &f * &g;
            let twisted = twist_product(&t, &f, &g);
            let reference = weyl_moyal_reference(&f, &g, 2);
            prop_assert_eq!(twisted.coeff(0), &fg);
            prop_assert_eq!(reference.coeff(0), &fg);
        }

        #[test]
        fn display_round_trip(f in gaussian_poly()) {
            prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }

        #[test]
        fn inverse_recursion_is_exact(c1 in -2i64..=2, c2 in -2i64..=2, order in 1usize..5) {
            let f = HbarSeries::new(order, vec![
                BidiffOp::identity(),
                BidiffOp::term((1, 0), (0, 1), Scalar::from_int(c1)),
                BidiffOp::term((0, 1), (0, 1), Scalar::from_int(c2)),
            ]);
            let t = TwistSeries::from_f(f).unwrap();
            prop_assert_eq!(t.f().mul(t.finv()), HbarSeries::constant(order, BidiffOp::identity()));
            prop_assert_eq!(t.finv().mul(t.f()), HbarSeries::constant(order, BidiffOp::identity()));
        }
    }
}
