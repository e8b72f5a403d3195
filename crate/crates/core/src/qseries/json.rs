use serde_json::{json, Value};

use super::{QSeries, EXACT};
use crate::arith::{rat_from_str, rat_to_string, Cyc12};
use crate::error::{invalid, Result};

/// `{"prec24": P, "terms": [{"n24": n, "coeffs": [{"l2": l, "c": [..4 rationals..]}]}]}`.
/// Exact series render `prec24` as null.
pub fn series_to_json(s: &QSeries) -> Value {
    let terms: Vec<Value> = s
        .layers()
        .map(|(n, lay)| {
            let coeffs: Vec<Value> = lay
                .iter()
                .map(|(l, c)| {
                    let parts: Vec<String> = c.coeffs().iter().map(rat_to_string).collect();
                    json!({"l2": l, "c": parts})
                })
                .collect();
            json!({"n24": n, "coeffs": coeffs})
        })
        .collect();
    let prec = if s.is_exact() { Value::Null } else { json!(s.prec24()) };
    json!({"prec24": prec, "terms": terms})
}

pub fn series_from_json(v: &Value) -> Result<QSeries> {
    let prec = match &v["prec24"] {
        Value::Null => EXACT,
        p => p.as_i64().ok_or_else(|| invalid("prec24 must be an integer"))?,
    };
    let mut s = QSeries::zero(prec);
    let terms = v["terms"].as_array().ok_or_else(|| invalid("terms must be an array"))?;
    for t in terms {
        let n = t["n24"].as_i64().ok_or_else(|| invalid("n24 must be an integer"))?;
        let coeffs = t["coeffs"]
            .as_array()
            .ok_or_else(|| invalid("coeffs must be an array"))?;
        for c in coeffs {
            let l = c["l2"].as_i64().ok_or_else(|| invalid("l2 must be an integer"))?;
            let parts = c["c"].as_array().filter(|a| a.len() == 4);
            let parts = parts.ok_or_else(|| invalid("c must hold four rationals"))?;
            let mut r = Vec::with_capacity(4);
            for p in parts {
                let txt = p.as_str().ok_or_else(|| invalid("rational must be a string"))?;
                r.push(rat_from_str(txt).ok_or_else(|| invalid(format!("bad rational {txt}")))?);
            }
            let arr: [_; 4] = r.try_into().unwrap();
            s.add_term(n, l, &Cyc12::new(arr));
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn round_trip() {
        let mut s = QSeries::zero(50);
        s.add_term(3, -1, &Cyc12::from(rat(5, 1)));
        s.add_term(27, 2, &Cyc12::zeta_pow(5));
        let v = series_to_json(&s);
        assert_eq!(v["terms"][0]["coeffs"][0]["c"][0], "5/1");
        assert_eq!(v["terms"][0]["coeffs"][0]["c"][1], "0/1");
        assert_eq!(series_from_json(&v).unwrap(), s);
    }
}
