//! Value parsers for angle, fraction and complex arguments.

use std::f64::consts::PI;

use num_complex::Complex64;
use qinfo_core::scenarios::pi_fraction;

fn parse_u64(s: &str, whole: &str) -> Result<u64, String> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| format!("invalid integer `{s}` in `{whole}`"))
}

/// `pi`, `pi/N`, `K*pi`, `K*pi/N` or `Kpi/N`, optionally negated.
fn parse_pi_token(token: &str) -> Option<Result<f64, String>> {
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    let at = body.find("pi")?;
    let k = body[..at].trim_end_matches('*');
    let rest = &body[at + 2..];
    let parsed = (|| {
        let num = if k.is_empty() {
            1
        } else {
            parse_u64(k, token)?
        };
        let den = match rest.strip_prefix('/') {
            Some(d) => parse_u64(d, token)?,
            None if rest.is_empty() => 1,
            None => return Err(format!("invalid angle `{token}`")),
        };
        if den == 0 {
            return Err(format!("zero denominator in `{token}`"));
        }
        pi_fraction(num, den).map_err(|e| e.to_string())
    })();
    Some(parsed.map(|v| if negative { -v } else { v }))
}

/// An angle in radians. Plain numbers are radians, or degrees when `degrees`
/// is set; multiples of π are exact either way. Whole degrees map onto exact
/// fractions of π so that `60` and `pi/3` agree bit for bit.
pub fn angle(token: &str, degrees: bool) -> Result<f64, String> {
    let token = token.trim();
    if let Some(v) = parse_pi_token(token) {
        return v;
    }
    let x: f64 = token
        .parse()
        .map_err(|_| format!("invalid angle `{token}`"))?;
    if !x.is_finite() {
        return Err(format!("invalid angle `{token}`"));
    }
    if !degrees {
        return Ok(x);
    }
    if x.fract() == 0.0 && x.abs() < 1e15 {
        let v = pi_fraction(x.abs() as u64, 180).map_err(|e| e.to_string())?;
        return Ok(if x < 0.0 { -v } else { v });
    }
    Ok(x * PI / 180.0)
}

/// A real number or a fraction `p/q`, optionally negated.
pub fn fraction(token: &str) -> Result<f64, String> {
    let token = token.trim();
    let bad = || format!("invalid number `{token}`");
    let x = match token.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0.0 {
                return Err(bad());
            }
            p / q
        }
        None => token.parse().map_err(|_| bad())?,
    };
    if x.is_finite() {
        Ok(x)
    } else {
        Err(bad())
    }
}

/// `x`, `yi`, `x+yi`, `x-yi`, with `i` or `j`.
pub fn complex(token: &str) -> Result<Complex64, String> {
    let s: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex number `{token}`");
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return fraction(&s)
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    // split at the last sign that is not an exponent sign or the leading sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.trim_start_matches('+').parse().map_err(|_| bad())?;
    let z = Complex64::new(re, im);
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}
