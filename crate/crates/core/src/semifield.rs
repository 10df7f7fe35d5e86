//! Scalar arithmetic in the four tropical semifields.
//!
//! | tag      | carrier     | a ⊕ b | a ⊗ b | zero | one |
//! |----------|-------------|-------|-------|------|-----|
//! | maxplus  | ℝ ∪ {−∞}    | max   | a + b | −∞   | 0   |
//! | minplus  | ℝ ∪ {+∞}    | min   | a + b | +∞   | 0   |
//! | maxtimes | ℝ₊ ∪ {0}    | max   | a · b | 0    | 1   |
//! | mintimes | ℝ₊ ∪ {+∞}   | min   | a · b | +∞   | 1   |
//!
//! Addition is idempotent, so `a ≤ b ⟺ a ⊕ b = b` defines a total order
//! under which the zero element is the bottom and every nonzero element
//! has a multiplicative inverse. The four structures are mutually
//! isomorphic; [`Value::iso_map`] moves elements between them along the
//! negation / exp / ln / reciprocal maps, composing through `maxplus`
//! for the two pairs without a direct map.
//!
//! Payload comparisons are exact floating-point comparisons. The order
//! is part of the algebra, so no epsilon is applied here; tolerances
//! belong to the checks built on top (see [`Value::eq_within`]).

use std::fmt;

use crate::error::{Error, Result};

/// Selects one of the four supported idempotent semifields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semifield {
    MaxPlus,
    MinPlus,
    MaxTimes,
    MinTimes,
}

impl Semifield {
    pub const ALL: [Semifield; 4] = [
        Semifield::MaxPlus,
        Semifield::MinPlus,
        Semifield::MaxTimes,
        Semifield::MinTimes,
    ];

    /// Lowercase name used in files, reports and CLI flags.
    pub fn name(self) -> &'static str {
        match self {
            Semifield::MaxPlus => "maxplus",
            Semifield::MinPlus => "minplus",
            Semifield::MaxTimes => "maxtimes",
            Semifield::MinTimes => "mintimes",
        }
    }

    /// Parses a lowercase tag name; names are matched exactly.
    pub fn parse(name: &str) -> Option<Semifield> {
        Semifield::ALL.into_iter().find(|t| t.name() == name)
    }

    fn is_plus(self) -> bool {
        matches!(self, Semifield::MaxPlus | Semifield::MinPlus)
    }

    fn is_max(self) -> bool {
        matches!(self, Semifield::MaxPlus | Semifield::MaxTimes)
    }

    pub(crate) fn zero_raw(self) -> f64 {
        match self {
            Semifield::MaxPlus => f64::NEG_INFINITY,
            Semifield::MinPlus | Semifield::MinTimes => f64::INFINITY,
            Semifield::MaxTimes => 0.0,
        }
    }

    pub(crate) fn one_raw(self) -> f64 {
        if self.is_plus() {
            0.0
        } else {
            1.0
        }
    }

    /// Top of the order among representable payloads; used only as a
    /// flagged sentinel for unconstrained variables, it lies outside the
    /// carrier for every tag.
    pub(crate) fn top_raw(self) -> f64 {
        match self {
            Semifield::MaxPlus | Semifield::MaxTimes => f64::INFINITY,
            Semifield::MinPlus => f64::NEG_INFINITY,
            Semifield::MinTimes => 0.0,
        }
    }

    pub(crate) fn in_carrier(self, x: f64) -> bool {
        if x.is_nan() {
            return false;
        }
        match self {
            Semifield::MaxPlus => x < f64::INFINITY,
            Semifield::MinPlus => x > f64::NEG_INFINITY,
            Semifield::MaxTimes => (0.0..f64::INFINITY).contains(&x),
            Semifield::MinTimes => x > 0.0,
        }
    }

    pub(crate) fn add_raw(self, a: f64, b: f64) -> f64 {
        if self.is_max() {
            a.max(b)
        } else {
            a.min(b)
        }
    }

    // Zero absorbs unconditionally so that e.g. maxtimes 0 ⊗ +inf-valued
    // sentinels can never produce NaN.
    pub(crate) fn mul_raw(self, a: f64, b: f64) -> f64 {
        let zero = self.zero_raw();
        if a == zero || b == zero {
            zero
        } else if self.is_plus() {
            a + b
        } else {
            a * b
        }
    }

    pub(crate) fn inv_raw(self, a: f64) -> f64 {
        if self.is_plus() {
            -a
        } else {
            1.0 / a
        }
    }

    /// The canonical order: `a ≤ b ⟺ a ⊕ b = b`.
    pub(crate) fn leq_raw(self, a: f64, b: f64) -> bool {
        self.add_raw(a, b) == b
    }

    pub(crate) fn lt_raw(self, a: f64, b: f64) -> bool {
        self.leq_raw(a, b) && a != b
    }

    /// Default relative tolerance for equality checks: the plus-based
    /// tags are compared exactly, the times-based ones accumulate
    /// rounding in products.
    pub(crate) fn rel_tol(self) -> f64 {
        if self.is_plus() {
            0.0
        } else {
            1e-12
        }
    }

    /// Exact equality, or relative closeness when `rel > 0`.
    pub(crate) fn eq_raw(self, a: f64, b: f64, rel: f64) -> bool {
        if a == b {
            return true;
        }
        rel > 0.0 && a.is_finite() && b.is_finite() && (a - b).abs() <= rel * a.abs().max(b.abs())
    }

    fn to_maxplus_raw(self, x: f64) -> f64 {
        match self {
            Semifield::MaxPlus => x,
            Semifield::MinPlus => -x,
            Semifield::MaxTimes => x.ln(),
            Semifield::MinTimes => -x.ln(),
        }
    }

    fn from_maxplus_raw(self, x: f64) -> f64 {
        match self {
            Semifield::MaxPlus => x,
            Semifield::MinPlus => -x,
            Semifield::MaxTimes => x.exp(),
            Semifield::MinTimes => (-x).exp(),
        }
    }

    /// Applies the isomorphism taking `self`-payloads to `target`-payloads.
    ///
    /// The six tag pairs with a single-function map use it directly
    /// (negation between the plus tags, exp/ln along the plus/times
    /// edges, reciprocal between the times tags); the remaining two
    /// pairs compose through maxplus. All paths commute.
    pub(crate) fn iso_raw(self, target: Semifield, x: f64) -> f64 {
        use Semifield::*;
        match (self, target) {
            (a, b) if a == b => x,
            (MaxPlus, MinPlus) | (MinPlus, MaxPlus) => -x,
            (MaxPlus, MaxTimes) | (MinPlus, MinTimes) => x.exp(),
            (MaxTimes, MaxPlus) | (MinTimes, MinPlus) => x.ln(),
            (MaxTimes, MinTimes) | (MinTimes, MaxTimes) => 1.0 / x,
            _ => target.from_maxplus_raw(self.to_maxplus_raw(x)),
        }
    }
}

impl fmt::Display for Semifield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element of one of the four semifields: a tag plus its payload.
///
/// The payload is guaranteed to lie in the tag's carrier (plus the
/// absorbing zero), so values are unforgeable evidence of carrier
/// membership. Values are immutable and `Copy`; all operations are pure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Value {
    tag: Semifield,
    raw: f64,
}

impl Value {
    /// Validates carrier membership; `-0.0` is normalized to `0.0`.
    pub fn new(tag: Semifield, payload: f64) -> Result<Value> {
        let payload = if payload == 0.0 { 0.0 } else { payload };
        if tag.in_carrier(payload) || payload == tag.zero_raw() {
            Ok(Value { tag, raw: payload })
        } else {
            Err(Error::CarrierViolation { tag, payload })
        }
    }

    // Internal constructor for payloads already known to be valid, and
    // for the out-of-carrier saturation sentinels of unbounded variables.
    pub(crate) fn raw_value(tag: Semifield, raw: f64) -> Value {
        debug_assert!(!raw.is_nan());
        let raw = if raw == 0.0 { 0.0 } else { raw };
        Value { tag, raw }
    }

    /// The additive zero `0̄` of the tag.
    pub fn zero(tag: Semifield) -> Value {
        Value { tag, raw: tag.zero_raw() }
    }

    /// The multiplicative one `1̄` of the tag.
    pub fn one(tag: Semifield) -> Value {
        Value { tag, raw: tag.one_raw() }
    }

    pub fn tag(self) -> Semifield {
        self.tag
    }

    pub fn payload(self) -> f64 {
        self.raw
    }

    pub fn is_zero(self) -> bool {
        self.raw == self.tag.zero_raw()
    }

    pub fn is_one(self) -> bool {
        self.raw == self.tag.one_raw()
    }

    fn same_tag(self, other: Value) -> Result<Semifield> {
        if self.tag == other.tag {
            Ok(self.tag)
        } else {
            Err(Error::TagMismatch(self.tag, other.tag))
        }
    }

    /// `a ⊕ b`: idempotent, commutative, with `0̄` neutral.
    pub fn add(self, other: Value) -> Result<Value> {
        let tag = self.same_tag(other)?;
        Ok(Value::raw_value(tag, tag.add_raw(self.raw, other.raw)))
    }

    /// `a ⊗ b`: commutative, with `1̄` neutral and `0̄` absorbing.
    pub fn mul(self, other: Value) -> Result<Value> {
        let tag = self.same_tag(other)?;
        Ok(Value::raw_value(tag, tag.mul_raw(self.raw, other.raw)))
    }

    /// The multiplicative inverse of a nonzero element.
    pub fn inv(self) -> Result<Value> {
        if self.is_zero() {
            return Err(Error::ZeroNotInvertible);
        }
        Ok(Value::raw_value(self.tag, self.tag.inv_raw(self.raw)))
    }

    /// The canonical order `a ≤ b ⟺ a ⊕ b = b`. Note that for the
    /// min-based tags this is the reverse of the numeric order.
    pub fn leq(self, other: Value) -> Result<bool> {
        let tag = self.same_tag(other)?;
        Ok(tag.leq_raw(self.raw, other.raw))
    }

    /// Strict order: `leq` and not equal.
    pub fn lt(self, other: Value) -> Result<bool> {
        let tag = self.same_tag(other)?;
        Ok(tag.lt_raw(self.raw, other.raw))
    }

    /// Moves the value to another semifield along the isomorphism maps;
    /// zeros map to zeros and identities to identities.
    pub fn iso_map(self, target: Semifield) -> Value {
        if self.is_zero() {
            return Value::zero(target);
        }
        Value::raw_value(target, self.tag.iso_raw(target, self.raw))
    }

    /// Exact equality, or relative closeness when `rel > 0`. Requires
    /// equal tags.
    pub fn eq_within(self, other: Value, rel: f64) -> bool {
        self.tag == other.tag && self.tag.eq_raw(self.raw, other.raw, rel)
    }

    /// Renders the payload as a report token: `-inf`, `+inf`, or a
    /// decimal literal that round-trips.
    pub fn token(self) -> String {
        format_token(self.raw)
    }

    /// Parses a `-inf` / `+inf` / decimal token and validates it against
    /// the tag's carrier.
    pub fn parse_token(tag: Semifield, token: &str) -> Result<Value> {
        let raw = parse_raw_token(token).ok_or_else(|| Error::Parse {
            line: 0,
            col: 0,
            reason: format!("invalid value token `{token}`"),
        })?;
        Value::new(tag, raw)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

pub(crate) fn format_token(raw: f64) -> String {
    if raw == f64::INFINITY {
        "+inf".to_string()
    } else if raw == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{raw}")
    }
}

pub(crate) fn parse_raw_token(token: &str) -> Option<f64> {
    match token {
        "-inf" => Some(f64::NEG_INFINITY),
        "+inf" => Some(f64::INFINITY),
        _ => {
            // Only plain decimal/scientific literals; named specials
            // like `inf` or `NaN` are rejected.
            if token.chars().any(|c| c.is_ascii_alphabetic() && !matches!(c, 'e' | 'E')) {
                return None;
            }
            token.parse::<f64>().ok().filter(|x| !x.is_nan())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(tag: Semifield, x: f64) -> Value {
        Value::new(tag, x).unwrap()
    }

    #[test]
    fn add_is_max_in_maxplus() {
        let tag = Semifield::MaxPlus;
        assert_eq!(v(tag, 3.0).add(v(tag, 5.0)).unwrap(), v(tag, 5.0));
        for x in [-2.5, 0.0, 7.0] {
            assert_eq!(v(tag, x).add(Value::zero(tag)).unwrap(), v(tag, x));
        }
    }

    #[test]
    fn add_is_min_in_mintimes() {
        // Row-2 evaluation of min(6·4, 2·3, 7·1, 5·2) reduces to this.
        let tag = Semifield::MinTimes;
        assert_eq!(v(tag, 24.0).add(v(tag, 6.0)).unwrap(), v(tag, 6.0));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            v(Semifield::MaxPlus, 3.0).mul(v(Semifield::MaxPlus, 5.0)).unwrap(),
            v(Semifield::MaxPlus, 8.0)
        );
        assert_eq!(
            v(Semifield::MaxTimes, 2.0).mul(v(Semifield::MaxTimes, 3.0)).unwrap(),
            v(Semifield::MaxTimes, 6.0)
        );
        for tag in Semifield::ALL {
            let x = v(tag, 2.0);
            assert!(x.mul(Value::zero(tag)).unwrap().is_zero());
            assert_eq!(x.mul(Value::one(tag)).unwrap(), x);
        }
    }

    #[test]
    fn zero_times_top_sentinel_is_zero_not_nan() {
        for tag in Semifield::ALL {
            let top = Value::raw_value(tag, tag.top_raw());
            let prod = Value::zero(tag).mul(top).unwrap();
            assert!(prod.is_zero());
        }
    }

    #[test]
    fn inv_examples() {
        assert_eq!(v(Semifield::MaxPlus, 7.0).inv().unwrap(), v(Semifield::MaxPlus, -7.0));
        assert_eq!(v(Semifield::MinTimes, 4.0).inv().unwrap(), v(Semifield::MinTimes, 0.25));
        for tag in Semifield::ALL {
            assert_eq!(Value::one(tag).inv().unwrap(), Value::one(tag));
            assert_eq!(Value::zero(tag).inv(), Err(Error::ZeroNotInvertible));
        }
    }

    #[test]
    fn leq_follows_the_additive_order() {
        assert!(v(Semifield::MaxPlus, 3.0).leq(v(Semifield::MaxPlus, 5.0)).unwrap());
        assert!(!v(Semifield::MaxPlus, 5.0).leq(v(Semifield::MaxPlus, 3.0)).unwrap());
        // In mintimes the order is the reverse of the numeric one:
        // 6 ⊕ 4 = min(6,4) = 4, so 6 ≤ 4 holds.
        assert!(v(Semifield::MinTimes, 6.0).leq(v(Semifield::MinTimes, 4.0)).unwrap());
        for tag in Semifield::ALL {
            for x in [0.5, 1.0, 42.0] {
                assert!(Value::zero(tag).leq(v(tag, x)).unwrap());
            }
        }
    }

    #[test]
    fn tag_mismatch_is_rejected() {
        let a = v(Semifield::MaxPlus, 1.0);
        let b = v(Semifield::MinPlus, 1.0);
        assert!(matches!(a.add(b), Err(Error::TagMismatch(_, _))));
        assert!(matches!(a.mul(b), Err(Error::TagMismatch(_, _))));
        assert!(matches!(a.leq(b), Err(Error::TagMismatch(_, _))));
    }

    #[test]
    fn carrier_validation() {
        assert!(Value::new(Semifield::MaxTimes, -3.0).is_err());
        assert!(Value::new(Semifield::MinTimes, -3.0).is_err());
        assert!(Value::new(Semifield::MinTimes, 0.5).is_ok());
        assert!(Value::new(Semifield::MaxPlus, f64::INFINITY).is_err());
        assert!(Value::new(Semifield::MaxPlus, f64::NEG_INFINITY).is_ok());
        assert!(Value::new(Semifield::MaxPlus, f64::NAN).is_err());
    }

    #[test]
    fn iso_map_identities_and_zeros() {
        let one = Value::one(Semifield::MaxPlus);
        assert_eq!(one.iso_map(Semifield::MaxTimes), Value::one(Semifield::MaxTimes));
        let zero = Value::zero(Semifield::MaxPlus);
        assert_eq!(zero.iso_map(Semifield::MaxTimes), Value::zero(Semifield::MaxTimes));
        // Direct reciprocal edge stays exact.
        assert_eq!(
            v(Semifield::MaxTimes, 2.0).iso_map(Semifield::MinTimes),
            v(Semifield::MinTimes, 0.5)
        );
    }

    #[test]
    fn tokens_round_trip() {
        for (tag, x) in [
            (Semifield::MaxPlus, -7.25),
            (Semifield::MaxPlus, f64::NEG_INFINITY),
            (Semifield::MinTimes, 3.5),
            (Semifield::MinTimes, f64::INFINITY),
        ] {
            let val = Value::raw_value(tag, x);
            assert_eq!(Value::parse_token(tag, &val.token()).unwrap(), val);
        }
        assert!(parse_raw_token("nan").is_none());
        assert!(parse_raw_token("inf").is_none());
        assert!(parse_raw_token("x1").is_none());
        assert_eq!(parse_raw_token("1e3"), Some(1000.0));
    }
}
