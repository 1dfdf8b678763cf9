//! Three-significant-figure scientific notation for exact counts.

use std::fmt;
use std::str::FromStr;

use crate::count::BigCount;
use crate::error::Error;

/// `mantissa / 100 * 10^exponent`, with `mantissa` in `100..=999` (or zero
/// for the value zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sci3 {
    pub mantissa: u16,
    pub exponent: i32,
}

impl Sci3 {
    pub const ZERO: Sci3 = Sci3 {
        mantissa: 0,
        exponent: 0,
    };

    /// Round half up to three significant figures.
    pub fn from_count(x: &BigCount) -> Self {
        let digits = x.to_str_radix(10);
        if digits == "0" {
            return Self::ZERO;
        }
        let bytes = digits.as_bytes();
        let mut exponent = bytes.len() as i32 - 1;
        let mut mantissa: u16 = (0..3)
            .map(|k| bytes.get(k).map_or(0, |b| u16::from(b - b'0')))
            .fold(0, |acc, d| acc * 10 + d);
        if bytes.get(3).is_some_and(|&b| b >= b'5') {
            mantissa += 1;
            if mantissa == 1000 {
                mantissa = 100;
                exponent += 1;
            }
        }
        Self { mantissa, exponent }
    }
}

/// `4.41e3` below ten, `3.32e+76` from ten up.
impl fmt::Display for Sci3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.exponent >= 10 { "+" } else { "" };
        write!(
            f,
            "{}.{:02}e{sign}{}",
            self.mantissa / 100,
            self.mantissa % 100,
            self.exponent
        )
    }
}

impl FromStr for Sci3 {
    type Err = Error;

    /// Accepts `d.dde<exp>` with an optional exponent sign and either case of
    /// `e`, e.g. `4.41e3`, `2.93e+9`, `5.92E+103`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Domain(format!("not a 3-significant-figure number: {s:?}"));
        let (mant, exp) = s.trim().split_once(['e', 'E']).ok_or_else(bad)?;
        let (int, frac) = mant.split_once('.').ok_or_else(bad)?;
        if int.len() != 1 || frac.len() != 2 || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let mantissa: u16 = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let exponent: i32 = exp.strip_prefix('+').unwrap_or(exp).parse().map_err(|_| bad())?;
        if mantissa != 0 && mantissa < 100 {
            return Err(bad());
        }
        Ok(Self { mantissa, exponent })
    }
}
