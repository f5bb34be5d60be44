//! Exact phases: rational multiples of a full turn.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::Zero;

/// An exact rotation measured in turns (1 turn = 2π radians), stored reduced
/// in the half-open interval [0, 1).
///
/// Phases form an Abelian group under addition modulo one full turn; negation
/// is well defined and `Phase::ZERO` is the unit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Phase(Rational64);

impl Phase {
    pub const ZERO: Phase = Phase(Rational64::new_raw(0, 1));

    /// `num/den` turns, reduced modulo one turn.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Phase {
        Phase::from_rational(Rational64::new(num, den))
    }

    /// Any rational number of turns, wrapped into [0, 1).
    pub fn from_rational(r: Rational64) -> Phase {
        Phase(r - r.floor())
    }

    /// The stored fraction of a turn, always in [0, 1).
    pub fn turns(&self) -> Rational64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The unit complex number e^{2πi·turns}.
    ///
    /// Quarter-turn multiples (the stabilizer phases 1, i, −1, −i) are exact;
    /// everything else goes through floating-point trigonometry.
    pub fn unit(&self) -> Complex64 {
        let quarters = self.0 * Rational64::from_integer(4);
        if quarters.is_integer() {
            match quarters.to_integer() {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                3 => Complex64::new(0.0, -1.0),
                _ => unreachable!("phase is normalized to [0,1)"),
            }
        } else {
            let t = *self.0.numer() as f64 / *self.0.denom() as f64;
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t)
        }
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 + rhs.0)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 - rhs.0)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::from_rational(-self.0)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid phase literal {input:?}: expected a rational number of turns like \"3/4\"")]
pub struct PhaseParseError {
    pub input: String,
}

impl FromStr for Phase {
    type Err = PhaseParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PhaseParseError { input: s.to_string() };
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| err())?,
                d.trim().parse::<i64>().map_err(|_| err())?,
            ),
            None => (t.parse::<i64>().map_err(|_| err())?, 1),
        };
        if den == 0 {
            return Err(err());
        }
        Ok(Phase::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_into_unit_interval() {
        assert_eq!(Phase::new(5, 4), Phase::new(1, 4));
        assert_eq!(Phase::new(-1, 4), Phase::new(3, 4));
        assert_eq!(Phase::new(8, 4), Phase::ZERO);
        assert_eq!(Phase::new(3, -4), Phase::new(1, 4));
    }

    #[test]
    fn group_laws() {
        let a = Phase::new(3, 4);
        let b = Phase::new(1, 2);
        assert_eq!(a + b, Phase::new(1, 4));
        assert_eq!(a + (-a), Phase::ZERO);
        assert_eq!(a - b, Phase::new(1, 4));
        assert_eq!(Phase::ZERO + a, a);
    }

    #[test]
    fn quarter_turn_units_are_exact() {
        assert_eq!(Phase::ZERO.unit(), Complex64::new(1.0, 0.0));
        assert_eq!(Phase::new(1, 4).unit(), Complex64::new(0.0, 1.0));
        assert_eq!(Phase::new(1, 2).unit(), Complex64::new(-1.0, 0.0));
        assert_eq!(Phase::new(3, 4).unit(), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn eighth_turn_unit_matches_trig() {
        let u = Phase::new(1, 8).unit();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((u.re - s).abs() < 1e-15 && (u.im - s).abs() < 1e-15);
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1/2", "3/4", "5/7"] {
            let p: Phase = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert_eq!("-1/4".parse::<Phase>().unwrap(), Phase::new(3, 4));
        assert_eq!("2".parse::<Phase>().unwrap(), Phase::ZERO);
        assert!("1/0".parse::<Phase>().is_err());
        assert!("x".parse::<Phase>().is_err());
    }
}
