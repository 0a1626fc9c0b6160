//! Complex literal grammar: optional real part, optional imaginary part
//! suffixed `i`; no whitespace. Examples: `0.5`, `0.7i`, `i`, `-i`,
//! `0.5+0.7i`, `-0.5-0.7i`, `1e-3+2.5e-2i`.

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("invalid complex literal '{s}'");
    if s.is_empty() || s.contains(char::is_whitespace) {
        return Err(bad());
    }
    if let Some(imag_text) = s.strip_suffix(['i', 'I']) {
        // find the sign that splits real and imaginary parts: a '+'/'-' that
        // is neither leading nor an exponent sign
        let bytes = imag_text.as_bytes();
        let mut split = None;
        for pos in (1..bytes.len()).rev() {
            let c = bytes[pos];
            if (c == b'+' || c == b'-') && !matches!(bytes[pos - 1], b'e' | b'E') {
                split = Some(pos);
                break;
            }
        }
        match split {
            Some(pos) => {
                let re = parse_real(&imag_text[..pos]).ok_or_else(bad)?;
                let im = parse_signed_or_unit(&imag_text[pos..]).ok_or_else(bad)?;
                Ok(Complex64::new(re, im))
            }
            None => {
                let im = parse_signed_or_unit(imag_text).ok_or_else(bad)?;
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        parse_real(s).map(|re| Complex64::new(re, 0.0)).ok_or_else(bad)
    }
}

fn parse_real(s: &str) -> Option<f64> {
    if s.is_empty() || s.contains(char::is_whitespace) {
        return None;
    }
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// The imaginary coefficient: empty or a bare sign means ±1.
fn parse_signed_or_unit(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        other => parse_real(other),
    }
}

pub fn format_complex(v: Complex64) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.re == 0.0 {
        format!("{}i", v.im)
    } else if v.im < 0.0 {
        format!("{}{}i", v.re, v.im)
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}
