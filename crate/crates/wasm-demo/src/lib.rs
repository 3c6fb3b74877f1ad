//! Browser demo: explores the (a, b) parameter plane of the built-in
//! algebras interactively. Three operations are exposed to JavaScript:
//!
//! * [`analyze_point`] -- the full exact report at one rational point;
//! * [`region_map`] -- an RGBA image of a chosen quantity over a rectangle
//!   (minimal-class regions, scalar-curvature signs, sectional signs);
//! * [`symbolic_report`] -- the symbolic report for an algebra.
//!
//! All arithmetic stays exact: pixel centres are snapped to rationals with
//! denominator 2^20 and every quantity is evaluated over Q.

use wasm_bindgen::prelude::*;

mod engine {
    use std::cell::RefCell;
    use std::collections::BTreeMap;
    use std::rc::Rc;

    use hnlab_core::analysis::analyze;
    use hnlab_core::curvature::Sign;
    use hnlab_core::exactalg::{parse_rational, Poly, Rational};
    use hnlab_core::liealg::catalog;
    use hnlab_core::verify::{compute, Computed};

    thread_local! {
        static CACHE: RefCell<BTreeMap<String, Rc<Computed>>> = RefCell::new(BTreeMap::new());
    }

    fn computed_for(name: &str) -> Result<Rc<Computed>, String> {
        CACHE.with(|cache| {
            if let Some(c) = cache.borrow().get(name) {
                return Ok(Rc::clone(c));
            }
            let alg = catalog::get(name).map_err(|e| e.to_string())?;
            let c = Rc::new(compute(&alg).map_err(|e| e.to_string())?);
            cache.borrow_mut().insert(name.to_string(), Rc::clone(&c));
            Ok(c)
        })
    }

    pub fn algebras() -> String {
        let names: Vec<&str> = catalog::NAMES.to_vec();
        serde_json::to_string(&names).expect("name list serializes")
    }

    fn assignment(c: &Computed, a: Rational, b: Rational) -> BTreeMap<String, Rational> {
        let names = c.alg.vars().names();
        [(names[0].clone(), a), (names[1].clone(), b)].into()
    }

    pub fn analyze_point(name: &str, a: &str, b: &str) -> Result<String, String> {
        let c = computed_for(name)?;
        let a = parse_rational(a).map_err(|e| e.to_string())?;
        let b = parse_rational(b).map_err(|e| e.to_string())?;
        let asgn = assignment(&c, a, b);
        let report = analyze(&c.alg, &c.frame, Some(&asgn)).map_err(|e| e.to_string())?;
        Ok(report.to_json())
    }

    pub fn symbolic_report(name: &str) -> Result<String, String> {
        let c = computed_for(name)?;
        let report = analyze(&c.alg, &c.frame, None).map_err(|e| e.to_string())?;
        Ok(report.to_json())
    }

    /// Snaps a coordinate to a rational with denominator 2^20, keeping the
    /// per-pixel evaluation exact and fast.
    fn snap(x: f64) -> Rational {
        const DENOM: i64 = 1 << 20;
        Rational::new(((x * DENOM as f64).round() as i64).into(), DENOM.into())
    }

    fn class_color(label: &str) -> [u8; 4] {
        // Deterministic palette from the label text.
        let mut h: u32 = 2166136261;
        for byte in label.bytes() {
            h ^= byte as u32;
            h = h.wrapping_mul(16777619);
        }
        let r = 96 + (h & 0x7f) as u8;
        let g = 96 + ((h >> 8) & 0x7f) as u8;
        let b = 96 + ((h >> 16) & 0x7f) as u8;
        [r, g, b, 255]
    }

    fn sign_color(sign: Sign) -> [u8; 4] {
        match sign {
            Sign::Positive => [46, 160, 67, 255],
            Sign::Negative => [206, 61, 61, 255],
            Sign::Zero => [250, 250, 250, 255],
        }
    }

    const OUT_OF_DOMAIN: [u8; 4] = [36, 36, 42, 255];

    /// RGBA map of `layer` over [a_min, a_max] x [b_min, b_max]; the b axis
    /// points up (row 0 is b_max). Layers: `classes`, `tau`, `tau**1`,
    /// `tau**2`, `tau**3`, `sectional`.
    pub fn region_map(
        name: &str,
        layer: &str,
        a_min: f64,
        a_max: f64,
        b_min: f64,
        b_max: f64,
        width: u32,
        height: u32,
    ) -> Result<Vec<u8>, String> {
        if width == 0 || height == 0 || width > 1024 || height > 1024 {
            return Err("image dimensions must be within 1..=1024".to_string());
        }
        if !(a_min < a_max && b_min < b_max) {
            return Err("empty parameter rectangle".to_string());
        }
        let c = computed_for(name)?;
        let scalar: Option<&Poly> = match layer {
            "tau" => Some(&c.bundle.tau),
            "tau**1" => Some(&c.bundle.tau_star_star[0]),
            "tau**2" => Some(&c.bundle.tau_star_star[1]),
            "tau**3" => Some(&c.bundle.tau_star_star[2]),
            "classes" | "sectional" => None,
            other => return Err(format!("unknown layer `{other}`")),
        };

        let mut pixels = vec![0u8; (width * height * 4) as usize];
        let da = (a_max - a_min) / width as f64;
        let db = (b_max - b_min) / height as f64;
        for row in 0..height {
            let b_val = snap(b_max - (row as f64 + 0.5) * db);
            for col in 0..width {
                let a_val = snap(a_min + (col as f64 + 0.5) * da);
                let asgn = assignment(&c, a_val.clone(), b_val.clone());
                let color = if c.alg.check_constraints(&asgn).is_err() {
                    OUT_OF_DOMAIN
                } else {
                    match layer {
                        "classes" => {
                            let mut label = String::new();
                            for report in c.reports.iter() {
                                let minimal =
                                    report.minimal_at(&asgn).map_err(|e| e.to_string())?;
                                label.push_str(&minimal.to_string());
                                label.push('|');
                            }
                            class_color(&label)
                        }
                        "sectional" => {
                            let mut positive = 0usize;
                            let mut negative = 0usize;
                            for entry in &c.table.entries {
                                match Sign::of(
                                    &entry.value.eval(&asgn).map_err(|e| e.to_string())?,
                                ) {
                                    Sign::Positive => positive += 1,
                                    Sign::Negative => negative += 1,
                                    Sign::Zero => {}
                                }
                            }
                            if positive == 6 {
                                [46, 160, 67, 255]
                            } else if negative == 6 {
                                [206, 61, 61, 255]
                            } else {
                                // Mixed signature: shade by the balance.
                                let t = (positive * 255 / 6) as u8;
                                [120, t.max(60), 160, 255]
                            }
                        }
                        _ => {
                            let p = scalar.expect("scalar layer");
                            sign_color(Sign::of(
                                &p.eval(&asgn).map_err(|e| e.to_string())?,
                            ))
                        }
                    }
                };
                let at = ((row * width + col) * 4) as usize;
                pixels[at..at + 4].copy_from_slice(&color);
            }
        }
        Ok(pixels)
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn analyze_point_reports_classes() {
            let json = analyze_point("g4_5", "1", "-3").unwrap();
            let v: serde_json::Value = serde_json::from_str(&json).unwrap();
            assert_eq!(v["classes"]["J2"]["minimal"], "W2+W3");
        }

        #[test]
        fn symbolic_report_carries_tau() {
            let json = symbolic_report("g4_5").unwrap();
            assert!(json.contains("2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2"));
        }

        #[test]
        fn region_map_shapes_and_domain_masking() {
            // g4_6 has the half-plane domain b >= 0: the lower half of a
            // symmetric rectangle must be masked out.
            let px = region_map("g4_6", "tau**3", -1.0, 1.0, -1.0, 1.0, 8, 8).unwrap();
            assert_eq!(px.len(), 8 * 8 * 4);
            let pixel = |row: usize, col: usize| &px[(row * 8 + col) * 4..(row * 8 + col) * 4 + 4];
            assert_eq!(pixel(7, 0), OUT_OF_DOMAIN);
            // tau**3 = 2(a^2 + b^2 + 1) is positive wherever defined.
            assert_eq!(pixel(0, 7), [46, 160, 67, 255]);
        }

        #[test]
        fn region_map_rejects_bad_input() {
            assert!(region_map("g4_5", "tau", 0.0, 1.0, 0.0, 1.0, 0, 8).is_err());
            assert!(region_map("g4_5", "nope", 0.0, 1.0, 0.0, 1.0, 8, 8).is_err());
            assert!(region_map("g9_99", "tau", 0.0, 1.0, 0.0, 1.0, 8, 8).is_err());
        }

        #[test]
        fn algebra_listing() {
            let v: Vec<String> = serde_json::from_str(&algebras()).unwrap();
            assert_eq!(v, vec!["g4_5", "g4_6"]);
        }
    }
}

/// JSON list of the available algebra names.
#[wasm_bindgen]
pub fn algebras() -> String {
    engine::algebras()
}

/// Full exact analysis at a rational point, as a JSON report string.
#[wasm_bindgen]
pub fn analyze_point(algebra: &str, a: &str, b: &str) -> Result<String, JsValue> {
    engine::analyze_point(algebra, a, b).map_err(|e| JsValue::from_str(&e))
}

/// Symbolic analysis of an algebra, as a JSON report string.
#[wasm_bindgen]
pub fn symbolic_report(algebra: &str) -> Result<String, JsValue> {
    engine::symbolic_report(algebra).map_err(|e| JsValue::from_str(&e))
}

/// RGBA pixels (row-major, b axis pointing up) of one quantity over a
/// parameter rectangle. Layers: `classes`, `tau`, `tau**1`, `tau**2`,
/// `tau**3`, `sectional`.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn region_map(
    algebra: &str,
    layer: &str,
    a_min: f64,
    a_max: f64,
    b_min: f64,
    b_max: f64,
    width: u32,
    height: u32,
) -> Result<Vec<u8>, JsValue> {
    engine::region_map(algebra, layer, a_min, a_max, b_min, b_max, width, height)
        .map_err(|e| JsValue::from_str(&e))
}
