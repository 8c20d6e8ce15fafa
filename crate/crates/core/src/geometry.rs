//! Exact 3D vector arithmetic over arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A point or direction in 3-space with exact rational coordinates.
///
/// In JSON, coordinates that fit an `i64` are plain numbers and everything
/// else is a string such as `"-7/3"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[Coord; 3]", try_from = "[Coord; 3]")]
pub struct Vec3(pub [Rational; 3]);

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coord {
    Int(i64),
    Text(String),
}

impl From<Vec3> for [Coord; 3] {
    fn from(v: Vec3) -> Self {
        v.0.map(
            |c| match c.is_integer().then(|| c.to_integer().to_i64()).flatten() {
                Some(i) => Coord::Int(i),
                None => Coord::Text(c.to_string()),
            },
        )
    }
}

impl TryFrom<[Coord; 3]> for Vec3 {
    type Error = String;

    fn try_from(c: [Coord; 3]) -> Result<Self, String> {
        let [x, y, z] = c.map(|c| match c {
            Coord::Int(i) => Some(rat(i)),
            Coord::Text(t) => parse_rational(&t),
        });
        match (x, y, z) {
            (Some(x), Some(y), Some(z)) => Ok(Vec3([x, y, z])),
            _ => Err("coordinates must be integers or rationals like \"-7/3\"".into()),
        }
    }
}

impl Vec3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Vec3([x, y, z])
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Vec3([rat(x), rat(y), rat(z)])
    }

    pub fn zero() -> Self {
        Vec3::from_ints(0, 0, 0)
    }

    pub fn x(&self) -> &Rational {
        &self.0[0]
    }

    pub fn y(&self) -> &Rational {
        &self.0[1]
    }

    pub fn z(&self) -> &Rational {
        &self.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vec3) -> Rational {
        &self.0[0] * &other.0[0] + &self.0[1] * &other.0[1] + &self.0[2] * &other.0[2]
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &other.0;
        Vec3([a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])
    }

    pub fn scale(&self, k: &Rational) -> Vec3 {
        Vec3([&self.0[0] * k, &self.0[1] * k, &self.0[2] * k])
    }

    /// `det[self, b, c]`
    pub fn triple(&self, b: &Vec3, c: &Vec3) -> Rational {
        self.dot(&b.cross(c))
    }

    pub fn is_parallel_to(&self, other: &Vec3) -> bool {
        self.cross(other).is_zero()
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> Rational {
        self.0
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Rescales a non-zero vector to the primitive integer vector pointing the same way.
    pub fn primitive(&self) -> Vec3 {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * &lcm).to_integer()).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Vec3([
            BigRational::from_integer(&ints[0] / &gcd),
            BigRational::from_integer(&ints[1] / &gcd),
            BigRational::from_integer(&ints[2] / &gcd),
        ])
    }

    /// Primitive direction of the line through this vector, with the first
    /// non-zero coordinate made positive. Returns the key and whether the
    /// vector itself pointed the other way.
    pub fn line_key(&self) -> (Vec3, bool) {
        let p = self.primitive();
        let flip =
            p.0.iter()
                .find(|c| !c.is_zero())
                .map(|c| c.is_negative())
                .unwrap_or(false);
        if flip {
            (-p, true)
        } else {
            (p, false)
        }
    }

    pub fn to_f64(&self) -> [f64; 3] {
        let f = |c: &Rational| c.to_f64().unwrap_or(f64::NAN);
        [f(&self.0[0]), f(&self.0[1]), f(&self.0[2])]
    }

    /// Rounds a float vector onto the integer grid after scaling its largest
    /// component to `magnitude`.
    pub fn from_f64_scaled(v: [f64; 3], magnitude: f64) -> Option<Vec3> {
        let m = v.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
        if !(m.is_finite() && m > 0.0) {
            return None;
        }
        let k = magnitude / m;
        let r: Vec<i64> = v.iter().map(|c| (c * k).round() as i64).collect();
        let out = Vec3::from_ints(r[0], r[1], r[2]);
        (!out.is_zero()).then_some(out)
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3([
            &self.0[0] + &o.0[0],
            &self.0[1] + &o.0[1],
            &self.0[2] + &o.0[2],
        ])
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3([
            &self.0[0] - &o.0[0],
            &self.0[1] - &o.0[1],
            &self.0[2] - &o.0[2],
        ])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        &self + &o
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        &self - &o
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        let [a, b, c] = self.0;
        Vec3([-a, -b, -c])
    }
}

impl Mul<&Rational> for &Vec3 {
    type Output = Vec3;
    fn mul(self, k: &Rational) -> Vec3 {
        self.scale(k)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Renders a rational as a decimal rounded half away from zero to `digits`
/// fractional digits.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = value * BigRational::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let abs = scaled.abs();
    let (q, r) = abs.numer().div_rem(abs.denom());
    let twice = r * 2u32;
    let rounded = if &twice >= abs.denom() { q + 1u32 } else { q };
    if rounded.is_zero() {
        return if digits == 0 {
            "0".to_string()
        } else {
            format!("0.{}", "0".repeat(digits))
        };
    }
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{rounded}");
    }
    let (int, frac) = rounded.div_rem(&scale);
    let frac = frac.to_string();
    format!("{sign}{int}.{}{frac}", "0".repeat(digits - frac.len()))
}

/// Parses an integer, a decimal (`-1.25`, `3e-2`) or a fraction (`7/3`) exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int}{frac}").parse().ok()?;
    let exp = exp - frac.len() as i32;
    let ten = BigInt::from(10u32);
    let mut value = if exp >= 0 {
        BigRational::from_integer(all * ten.pow(exp as u32))
    } else {
        BigRational::new(all, ten.pow((-exp) as u32))
    };
    if neg {
        value = -value;
    }
    Some(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_form() {
        let v = Vec3::new(rat(3), ratio(-7, 3), rat(i64::MAX) * rat(4));
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, r#"[3,"-7/3","36893488147419103228"]"#);
        assert_eq!(serde_json::from_str::<Vec3>(&text).unwrap(), v);
        assert!(serde_json::from_str::<Vec3>(r#"[1,"x",2]"#).is_err());
    }

    #[test]
    fn cross_and_triple() {
        let x = Vec3::from_ints(1, 0, 0);
        let y = Vec3::from_ints(0, 1, 0);
        assert_eq!(x.cross(&y), Vec3::from_ints(0, 0, 1));
        assert_eq!(x.triple(&y, &Vec3::from_ints(0, 0, 1)), rat(1));
        assert_eq!(x.triple(&y, &Vec3::from_ints(1, 1, 0)), rat(0));
    }

    #[test]
    fn primitive_and_line_key() {
        let v = Vec3::new(ratio(-2, 3), ratio(4, 3), rat(0));
        assert_eq!(v.primitive(), Vec3::from_ints(-1, 2, 0));
        let (key, flipped) = v.line_key();
        assert_eq!(key, Vec3::from_ints(1, -2, 0));
        assert!(flipped);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&rat(3), 0), "3");
        assert_eq!(to_decimal(&rat(-3), 2), "-3.00");
        assert_eq!(to_decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&ratio(-1, 2), 0), "-1");
        assert_eq!(to_decimal(&ratio(1, 200), 2), "0.01");
        assert_eq!(to_decimal(&ratio(-1, 1000), 2), "0.00");
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_rational("1.25"), Some(ratio(5, 4)));
        assert_eq!(parse_rational("-0.5"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("7/3"), Some(ratio(7, 3)));
        assert_eq!(parse_rational("2e2"), Some(rat(200)));
        assert_eq!(parse_rational("1.5e-1"), Some(ratio(3, 20)));
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("1/0"), None);
    }
}
