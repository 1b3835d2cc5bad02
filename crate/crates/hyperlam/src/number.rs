//! Fixed significant-digit rendering of floating-point values.

use std::str::FromStr;

use serde_json::{Number, Value};

/// Writes `x` with exactly `digits` significant digits. Moderate exponents
/// use positional notation, the rest use `d.ddde±x`.
pub fn format_sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1, "at least one significant digit");
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("`{:e}` output has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let body: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let sign = if negative { "-" } else { "" };
    if (-5..digits as i32).contains(&exp) {
        if exp >= 0 {
            let split = exp as usize + 1;
            let (int, frac) = body.split_at(split);
            if frac.is_empty() {
                format!("{sign}{int}")
            } else {
                format!("{sign}{int}.{frac}")
            }
        } else {
            let zeros = "0".repeat((-exp - 1) as usize);
            format!("{sign}0.{zeros}{body}")
        }
    } else {
        sci
    }
}

/// A JSON number carrying exactly the digits of [`format_sig`].
pub fn json_number(x: f64, digits: usize) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&format_sig(x, digits)).expect("format_sig emits valid JSON numbers"))
}
