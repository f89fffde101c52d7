use super::Cost;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Parses `7`, `-3/4` or `2.5` into an exact rational.
pub fn parse_cost(text: &str) -> Option<Cost> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().ok()?;
        let den: i64 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Cost::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 15 {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole: i64 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().ok()? };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().ok()?;
        let magnitude = whole.abs().checked_mul(scale)?.checked_add(frac)?;
        return Some(Cost::new(if negative { -magnitude } else { magnitude }, scale));
    }
    text.parse::<i64>().ok().map(Cost::from)
}

/// `p` for integers, `p/q` otherwise.
pub fn format_cost(c: &Cost) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn cost_to_f64(c: &Cost) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

pub fn cost_to_big(c: &Cost) -> BigRational {
    BigRational::new(BigInt::from(*c.numer()), BigInt::from(*c.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_cost("7"), Some(Cost::from(7)));
        assert_eq!(parse_cost("-3/4"), Some(Cost::new(-3, 4)));
        assert_eq!(parse_cost("2.5"), Some(Cost::new(5, 2)));
        assert_eq!(parse_cost("-0.25"), Some(Cost::new(-1, 4)));
        assert_eq!(parse_cost("1/0"), None);
        assert_eq!(parse_cost("x"), None);
        assert_eq!(format_cost(&Cost::new(6, 4)), "3/2");
        assert_eq!(format_cost(&Cost::from(-2)), "-2");
    }
}
