//! wasm-bindgen bindings for the static demo page in `www/`.
//!
//! Three operations are exposed: classifying a class against the cones,
//! sampling the height landscape on the degree-one slice
//! `α₁ + s·θ₂ + t·Q` together with its exact minimum, and the genus table
//! of minima versus curve height. The plain functions return JSON strings
//! so they can be tested on the host; the `#[wasm_bindgen]` wrappers only
//! convert errors.

use cxj_core::rational::{format_rational, parse_rational, to_decimal};
use cxj_core::{classify, cone_minimum, height_curve, standard_polarization, zhang_audit, Genus, NSClass, Rational};
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn class_from(g: i64, a: &str, b: &str, c: &str) -> Result<NSClass, String> {
    let r = |s: &str| parse_rational(s.trim()).map_err(|e| e.to_string());
    NSClass::mk_class(g, r(a)?, r(b)?, r(c)?).map_err(|e| e.to_string())
}

fn exact(r: &Rational) -> Value {
    json!({ "exact": format_rational(r), "approx": to_decimal(r, 6) })
}

fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn classify_json(g: i64, a: &str, b: &str, c: &str) -> Result<String, String> {
    let x = class_from(g, a, b, c)?;
    let v = classify(&x);
    Ok(json!({
        "class": x.to_string(),
        "region": v.region.as_str(),
        "apex": x.is_zero(),
        "is_ample": v.is_ample,
        "is_nef": v.is_nef,
        "is_big": v.is_big,
        "is_psef": v.is_psef,
        "defect": exact(&v.defect),
    })
    .to_string())
}

/// Heights `g!·(B + s·A − 2t·C)` on a `cols × rows` grid over
/// `t ∈ [t_min, t_max]`, `s ∈ [0, s_max]` (row 0 at `s_max`), with `NaN`
/// outside the cone `s ≥ g·t²`, plus the exact minimiser.
#[allow(clippy::too_many_arguments)]
pub fn landscape_json(
    g: i64,
    a: &str,
    b: &str,
    c: &str,
    t_min: f64,
    t_max: f64,
    s_max: f64,
    cols: u32,
    rows: u32,
) -> Result<String, String> {
    let l = class_from(g, a, b, c)?;
    let r = cone_minimum(&l).map_err(|e| e.to_string())?;
    let gf = approx(&Rational::from_integer(cxj_core::rational::factorial(l.genus().get())));
    let (la, lb, lc) = (approx(&l.a), approx(&l.b), approx(&l.c));
    let gd = g as f64;
    let cols = cols.clamp(2, 1024);
    let rows = rows.clamp(2, 1024);
    let mut values = Vec::with_capacity((cols * rows) as usize);
    for row in 0..rows {
        let s = s_max * (1.0 - row as f64 / (rows - 1) as f64);
        for col in 0..cols {
            let t = t_min + (t_max - t_min) * col as f64 / (cols - 1) as f64;
            let v = if s >= gd * t * t { gf * (lb + s * la - 2.0 * t * lc) } else { f64::NAN };
            values.push(if v.is_finite() { Value::from(v) } else { Value::Null });
        }
    }
    let witness = r
        .witness
        .as_ref()
        .map(|w| json!({ "p": w.p.to_string(), "q": w.q.to_string(), "class": w.class().to_string() }));
    Ok(json!({
        "cols": cols,
        "rows": rows,
        "values": values,
        "infimum": exact(&r.infimum),
        "s_star": exact(&r.s_star),
        "t_star": exact(&r.t_star),
        "s_star_f": approx(&r.s_star),
        "t_star_f": approx(&r.t_star),
        "witness": witness,
        "h_curve": height_curve(&l).ok().map(|h| exact(&h)),
    })
    .to_string())
}

pub fn table_json(g_min: i64, g_max: i64) -> Result<String, String> {
    if g_min < 2 || g_min > g_max || g_max > 60 {
        return Err(format!("genus range must satisfy 2 <= g_min <= g_max <= 60, got {g_min}..{g_max}"));
    }
    let rows = (g_min..=g_max)
        .map(|g| {
            let genus = Genus::new(g).map_err(|e| e.to_string())?;
            let a = zhang_audit(&standard_polarization(genus)).map_err(|e| e.to_string())?;
            Ok(json!({
                "g": g,
                "e1": exact(&a.e1),
                "e2": exact(&a.e2),
                "h": exact(&a.h_curve),
                "margin": exact(&a.violation_margin),
                "second_inequality_holds": a.second_inequality_holds,
            }))
        })
        .collect::<Result<Vec<Value>, String>>()?;
    Ok(Value::Array(rows).to_string())
}

#[wasm_bindgen(js_name = classifyClass)]
pub fn classify_class(g: i32, a: &str, b: &str, c: &str) -> Result<String, JsValue> {
    classify_json(g as i64, a, b, c).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = heightLandscape)]
#[allow(clippy::too_many_arguments)]
pub fn height_landscape(
    g: i32,
    a: &str,
    b: &str,
    c: &str,
    t_min: f64,
    t_max: f64,
    s_max: f64,
    cols: u32,
    rows: u32,
) -> Result<String, JsValue> {
    landscape_json(g as i64, a, b, c, t_min, t_max, s_max, cols, rows).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = minimaTable)]
pub fn minima_table(g_min: i32, g_max: i32) -> Result<String, JsValue> {
    table_json(g_min as i64, g_max as i64).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn classify_polarization() {
        let v = parse(&classify_json(2, "2", "1", "1").unwrap());
        assert_eq!(v["region"], "boundary");
        assert_eq!(v["defect"]["exact"], "0");
        assert!(classify_json(1, "1", "1", "1").is_err());
        assert!(classify_json(2, "1/0", "1", "1").is_err());
    }

    #[test]
    fn landscape_reports_exact_minimum() {
        let v = parse(&landscape_json(3, "3", "1", "1", -0.5, 0.5, 1.0, 11, 5).unwrap());
        assert_eq!(v["infimum"]["exact"], "16/3");
        assert_eq!(v["t_star"]["exact"], "1/9");
        assert_eq!(v["witness"]["class"], "(27,1,3)");
        assert_eq!(v["h_curve"]["exact"], "4");
        let values = v["values"].as_array().unwrap();
        assert_eq!(values.len(), 55);
        // bottom-left corner (s = 0, t = -0.5) is outside the cone
        assert!(values[44].is_null());
        // top-middle (s = 1, t = 0) is inside: 3!·(1 + 3) = 24
        assert_eq!(values[5].as_f64().unwrap(), 24.0);
        assert!(landscape_json(2, "1", "1", "1", 0.0, 1.0, 1.0, 4, 4).is_err());
    }

    #[test]
    fn table_rows() {
        let v = parse(&table_json(2, 4).unwrap());
        assert_eq!(v[0]["margin"]["exact"], "1/2");
        assert_eq!(v[1]["e1"]["exact"], "16/3");
        assert_eq!(v[2]["h"]["exact"], "18");
        assert!(table_json(3, 2).is_err());
        assert!(table_json(1, 2).is_err());
    }
}
