//! Exact rational numbers and their `"num/den"` serialization.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

/// Exact rational with i128 parts. Every rational the crate produces
/// (masses, representation weights) has tiny numerator and denominator,
/// so i128 leaves an enormous margin.
pub type Rat = Ratio<i128>;

pub fn rat(n: i128, d: i128) -> Rat {
    Ratio::new(n, d)
}

pub fn rat_int(n: i128) -> Rat {
    Ratio::from_integer(n)
}

/// Renders `3/4` as `"3/4"` and integers as `"5/1"`, the wire format used
/// by every JSON report.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Wrapper that serializes a rational in the `"num/den"` wire format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatJson(pub Rat);

impl Serialize for RatJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_string(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_string_format() {
        assert_eq!(rat_string(&rat(3, 4)), "3/4");
        assert_eq!(rat_string(&rat(6, 8)), "3/4");
        assert_eq!(rat_string(&rat_int(5)), "5/1");
    }
}
