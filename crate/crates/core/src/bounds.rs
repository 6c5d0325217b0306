//! Closed-form bounds on the number of distinct edge lengths, the counting
//! quantities behind them, and exact small-case counts to check them against.
//!
//! Expressions carrying an unspecified constant take it as a parameter `c`
//! (callers usually pass 1) and are labelled "up to constant" in reports.
//! Very large quantities are also given as natural logarithms.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub const CONSTANTS_POLICY: &str = "unspecified constants set to c (default 1); such values hold up to that constant";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Param {
    pub name: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedValue {
    pub name: String,
    /// `None` when not applicable or not representable as a float.
    pub value: Option<f64>,
    /// Natural logarithm, for values that may overflow.
    pub log_value: Option<f64>,
    /// Exact decimal value for integer quantities.
    pub exact: Option<String>,
    pub source: String,
    pub up_to_constant: bool,
}

impl NamedValue {
    fn new(name: &str, value: f64, source: &str, up_to_constant: bool) -> Self {
        NamedValue {
            name: name.into(),
            value: value.is_finite().then_some(value),
            log_value: None,
            exact: None,
            source: source.into(),
            up_to_constant,
        }
    }

    fn exact(name: &str, v: &BigUint, source: &str) -> Self {
        NamedValue {
            name: name.into(),
            value: v.to_f64().filter(|x| x.is_finite()),
            log_value: (!v.is_zero()).then(|| ln_big(v)),
            exact: Some(v.to_string()),
            source: source.into(),
            up_to_constant: false,
        }
    }

    fn not_applicable(name: &str, source: &str) -> Self {
        NamedValue { name: name.into(), value: None, log_value: None, exact: None, source: source.into(), up_to_constant: false }
    }

    fn with_log(mut self, log: f64) -> Self {
        self.log_value = Some(log);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub formula: String,
    pub params: Vec<Param>,
    pub values: Vec<NamedValue>,
    pub constants_policy: String,
    pub notes: Vec<String>,
}

impl BoundsReport {
    fn new(formula: &str, params: &[(&str, f64)]) -> Self {
        BoundsReport {
            formula: formula.into(),
            params: params.iter().map(|&(n, v)| Param { name: n.into(), value: v }).collect(),
            values: Vec::new(),
            constants_policy: CONSTANTS_POLICY.into(),
            notes: Vec::new(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&NamedValue> {
        self.values.iter().find(|v| v.name == name)
    }
}

/// Natural logarithm of a big integer (must be nonzero).
pub fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (v >> shift).to_f64().expect("64-bit mantissa");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `ln C(n, k)`, exact up to rounding of the final logarithm.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    let b = binomial(n, k);
    if b.is_zero() {
        f64::NEG_INFINITY
    } else {
        ln_big(&b)
    }
}

// ---------------------------------------------------------------- lower bounds

#[derive(Clone, Debug, PartialEq)]
pub struct LowerBounds {
    pub n: usize,
    pub m: usize,
    pub c: f64,
    /// `c·m·n^{−4/3}`.
    pub density: f64,
    /// `c·m^{1.592412}·n^{−2.320687}`.
    pub extremal: f64,
    /// `⌈(n−1)/3⌉`, for the complete graph on `n` vertices.
    pub complete: usize,
    /// `⌈√(n/2)⌉`, for `K_{2,n}`.
    pub k2n: usize,
}

pub fn eval_lower_bounds(n: usize, m: usize, c: f64) -> Result<LowerBounds> {
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    let max_m = n * (n - 1) / 2;
    if m > max_m {
        return Err(Error::param(format!("m = {m} exceeds n(n-1)/2 = {max_m}")));
    }
    let (nf, mf) = (n as f64, m as f64);
    Ok(LowerBounds {
        n,
        m,
        c,
        density: c * mf * nf.powf(-4.0 / 3.0),
        extremal: c * mf.powf(1.592412) * nf.powf(-2.320687),
        complete: (n - 1).div_ceil(3),
        k2n: crate::constructions::ceil_sqrt_half(n),
    })
}

impl LowerBounds {
    pub fn report(&self) -> BoundsReport {
        let mut r = BoundsReport::new("lower", &[("n", self.n as f64), ("m", self.m as f64), ("c", self.c)]);
        r.values.push(NamedValue::new("density", self.density, "edge-density", true));
        r.values.push(NamedValue::new("extremal", self.extremal, "point-circle-incidences", true));
        r.values.push(NamedValue::new("complete", self.complete as f64, "complete-graph", false));
        r.values.push(NamedValue::new("k2n", self.k2n as f64, "k2n-circles", false));
        r
    }
}

// ---------------------------------------------------------------- ex(n, d)

#[derive(Clone, Debug, PartialEq)]
pub struct ExBound {
    pub n: usize,
    pub d: usize,
    pub c: f64,
    /// `c·d·n^{4/3}`.
    pub linear_in_d: f64,
    /// `c·n^{1.457341}·d^{0.627977}`.
    pub incidence: f64,
}

/// Upper bounds on the number of edges of an `n`-vertex graph drawn with at
/// most `d` distinct lengths.
pub fn eval_ex_bound(n: usize, d: usize, c: f64) -> Result<ExBound> {
    if n == 0 || d == 0 {
        return Err(Error::param("n and d must be at least 1"));
    }
    let (nf, df) = (n as f64, d as f64);
    let (a, b) = if n == 1 { (0.0, 0.0) } else { (c * df * nf.powf(4.0 / 3.0), c * nf.powf(1.457341) * df.powf(0.627977)) };
    Ok(ExBound { n, d, c, linear_in_d: a, incidence: b })
}

impl ExBound {
    pub fn smaller(&self) -> &'static str {
        if self.linear_in_d <= self.incidence {
            "linear_in_d"
        } else {
            "incidence"
        }
    }

    pub fn best(&self) -> f64 {
        self.linear_in_d.min(self.incidence)
    }

    pub fn report(&self) -> BoundsReport {
        let mut r = BoundsReport::new("ex", &[("n", self.n as f64), ("d", self.d as f64), ("c", self.c)]);
        r.values.push(NamedValue::new("linear_in_d", self.linear_in_d, "edge-density", true));
        r.values.push(NamedValue::new("incidence", self.incidence, "point-circle-incidences", true));
        r.values.push(NamedValue::new("crossover_d", ex_crossover(self.n), "equal-constants crossover", false));
        r.notes.push(format!("smaller: {}", self.smaller()));
        r
    }
}

/// The `d` at which the two `ex(n, d)` expressions agree (equal constants):
/// `d = n^{(1.457341 − 4/3)/(1 − 0.627977)}`, roughly `n^{1/3}`.
pub fn ex_crossover(n: usize) -> f64 {
    (n as f64).powf((1.457341 - 4.0 / 3.0) / (1.0 - 0.627977))
}

// ---------------------------------------------------------------- counting

/// `(n−1)!!`, the number of perfect matchings on `n` labelled vertices.
pub fn count_perfect_matchings(n: usize) -> Result<BigUint> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::param(format!("perfect matchings need an even n >= 2, got {n}")));
    }
    let mut f = BigUint::one();
    for k in (3..n).step_by(2) {
        f *= k as u64;
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularCountBound {
    pub n: usize,
    pub delta: usize,
    /// `ln (n/3Δ)^{Δn/2}`.
    pub log_bound: f64,
    /// The same, evaluated directly when it does not overflow.
    pub bound: Option<f64>,
    /// Number of labelled `Δ`-regular graphs, for `n ≤ 8`.
    pub exact: Option<BigUint>,
}

/// Lower bound `(n/3Δ)^{Δn/2}` on the number of labelled `Δ`-regular graphs
/// on `n` vertices, with the exact count for small `n`.
pub fn eval_regular_count_bound(n: usize, delta: usize) -> Result<RegularCountBound> {
    if delta == 0 {
        return Err(Error::param("degree must be at least 1"));
    }
    if (n * delta) % 2 == 1 {
        return Err(Error::param(format!("no {delta}-regular graph on {n} vertices: n·Δ is odd")));
    }
    if n <= delta {
        return Err(Error::param(format!("need n > Δ, got n = {n}, Δ = {delta}")));
    }
    let half = (n * delta) as f64 / 2.0;
    let base = n as f64 / (3.0 * delta as f64);
    let direct = base.powf(half);
    Ok(RegularCountBound {
        n,
        delta,
        log_bound: half * base.ln(),
        bound: direct.is_finite().then_some(direct),
        exact: (n <= 8).then(|| count_regular_exact(n, delta)),
    })
}

impl RegularCountBound {
    pub fn report(&self) -> BoundsReport {
        let mut r = BoundsReport::new("regular", &[("n", self.n as f64), ("delta", self.delta as f64)]);
        let v = NamedValue::new("bound", self.bound.unwrap_or(f64::INFINITY), "regular-count", false).with_log(self.log_bound);
        r.values.push(v);
        match &self.exact {
            Some(e) => r.values.push(NamedValue::exact("exact", e, "enumeration")),
            None => r.values.push(NamedValue::not_applicable("exact", "enumeration")),
        }
        if 3 * self.delta > self.n {
            r.notes.push("n < 3Δ: the bound is only claimed for n ≥ cΔ".into());
        }
        r
    }
}

/// Labelled `Δ`-regular graphs on `n` vertices, by backtracking: vertices in
/// order pick their remaining neighbours among later vertices.
pub fn count_regular_exact(n: usize, delta: usize) -> BigUint {
    fn go(v: usize, start: usize, n: usize, need: &mut [usize]) -> u64 {
        if v == n {
            return 1;
        }
        if need[v] == 0 {
            return go(v + 1, v + 2, n, need);
        }
        let mut total = 0;
        for w in start.max(v + 1)..n {
            if need[w] == 0 {
                continue;
            }
            need[v] -= 1;
            need[w] -= 1;
            total += go(v, w + 1, n, need);
            need[v] += 1;
            need[w] += 1;
        }
        total
    }
    if (n * delta) % 2 == 1 || delta >= n.max(1) {
        return BigUint::from(u64::from(n > 0 && delta == 0));
    }
    let mut need = vec![delta; n];
    BigUint::from(go(0, 1, n, &mut need))
}

/// `C(δt, p)`: the zero-pattern bound for `t` polynomials of degree at most
/// `δ` in `p` variables.
pub fn eval_zero_pattern_bound(delta: u64, t: u64, p: u64) -> Result<BigUint> {
    if delta == 0 {
        return Err(Error::param("degree must be at least 1"));
    }
    if p > t {
        return Err(Error::param(format!("need p <= t, got p = {p}, t = {t}")));
    }
    Ok(binomial(delta * t, p))
}

#[derive(Clone, Debug, PartialEq)]
pub struct GraphCountBound {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub c: f64,
    /// `⌊c·d·n^{4/3}⌋`, the edge bound used.
    pub ex: u64,
    /// `ln[(e·n·d/2)^{2n+d} · C(ex, m)]`; `−∞` when `m > ex`.
    pub log_bound: f64,
}

/// Upper bound on the number of `n`-vertex, `m`-edge graphs drawable with at
/// most `d` lengths, in log space.
pub fn eval_graph_count_bound(n: usize, m: usize, d: usize, c: f64) -> Result<GraphCountBound> {
    let ex = eval_ex_bound(n, d, c)?.linear_in_d.floor() as u64;
    let base = std::f64::consts::E * n as f64 * d as f64 / 2.0;
    let log_bound = (2 * n + d) as f64 * base.ln() + ln_binomial(ex, m as u64);
    Ok(GraphCountBound { n, m, d, c, ex, log_bound })
}

impl GraphCountBound {
    pub fn report(&self) -> BoundsReport {
        let mut r = BoundsReport::new(
            "graph-count",
            &[("n", self.n as f64), ("m", self.m as f64), ("d", self.d as f64), ("c", self.c)],
        );
        r.values.push(NamedValue::new("ex", self.ex as f64, "edge-density", true));
        let direct = self.log_bound.exp();
        r.values.push(NamedValue::new("bound", direct, "graph-count", true).with_log(self.log_bound));
        r
    }
}

// ---------------------------------------------------------------- exponents

/// `(2−α)/β − (2−α+β)(4+2ε)/(β²Δ+4β)`.
pub fn poly_bound_exponent(alpha: f64, beta: f64, delta: f64, eps: f64) -> f64 {
    (2.0 - alpha) / beta - (2.0 - alpha + beta) * (4.0 + 2.0 * eps) / (beta * beta * delta + 4.0 * beta)
}

/// `2/3 − (20+10ε)/(3Δ+12)`.
pub fn degree7_exponent(delta: f64, eps: f64) -> f64 {
    2.0 / 3.0 - (20.0 + 10.0 * eps) / (3.0 * delta + 12.0)
}

/// `0.864138 − (4.682544+2.341272ε)/(0.394355Δ+2.511908)`.
pub fn degree8_exponent(delta: f64, eps: f64) -> f64 {
    0.864138 - (4.682544 + 2.341272 * eps) / (0.394355 * delta + 2.511908)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeExponents {
    pub delta: usize,
    pub eps: f64,
    /// `None` for `Δ < 7`, where the formula does not apply.
    pub degree7: Option<f64>,
    pub degree8: f64,
}

/// Exponents `x` of the `n^x` lower bounds for graphs of maximum degree `Δ`.
pub fn eval_degree_lower_exponents(delta: usize, eps: f64) -> Result<DegreeExponents> {
    if delta < 5 {
        return Err(Error::param(format!("need Δ >= 5, got {delta}")));
    }
    if eps.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::param("need ε > 0"));
    }
    let d = delta as f64;
    Ok(DegreeExponents {
        delta,
        eps,
        degree7: (delta >= 7).then(|| degree7_exponent(d, eps)),
        degree8: degree8_exponent(d, eps),
    })
}

impl DegreeExponents {
    /// Which exponent is larger (`"degree8"` from `Δ = 17` on).
    pub fn dominant(&self) -> &'static str {
        match self.degree7 {
            Some(e7) if e7 >= self.degree8 => "degree7",
            _ => "degree8",
        }
    }

    pub fn report(&self) -> BoundsReport {
        let mut r = BoundsReport::new("degree-exponents", &[("delta", self.delta as f64), ("eps", self.eps)]);
        match self.degree7 {
            Some(e) => r.values.push(NamedValue::new("degree7", e, "degree7", false)),
            None => {
                r.values.push(NamedValue::not_applicable("degree7", "degree7"));
                r.notes.push("degree7 formula needs Δ >= 7".into());
            }
        }
        r.values.push(NamedValue::new("degree8", self.degree8, "degree8", false));
        r.notes.push(format!("dominant: {}", self.dominant()));
        r
    }
}
