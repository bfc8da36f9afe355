//! Browser bindings for the interactive demo page: diamond products, the
//! labeled path families with rendered figures, and poset invariants.
//! Every export takes plain strings and returns either a display string or
//! a JSON document, so the page needs no framework.

use cdlab::diamond::diamond_cached;
use cdlab::latpaths::{
    enumerate_gamma, enumerate_omega, render_paths, sum_weights_ab, sum_weights_cd, weight_ab,
    weight_cd, AxisLabeling, RenderFormat,
};
use cdlab::ncalg::{parse_polynomial, parse_word, Alphabet, NcPolynomial};
use cdlab::poset::{
    ab_index, cd_index, diamond_product_poset, flag_f_vector, flag_h_vector, generate,
    prism_poset, pyramid_poset, FlagVector, GradedPoset,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn alphabet_of(mode: &str) -> Result<Alphabet, String> {
    match mode {
        "ab" => Ok(Alphabet::Ab),
        "cd" => Ok(Alphabet::Cd),
        other => Err(err(format!("unknown mode {other:?} (want ab or cd)"))),
    }
}

/// Diamond product of two polynomials, returned in canonical text form.
/// `method` is "recursion" or "paths"; both agree on every input.
#[wasm_bindgen]
pub fn diamond_product(mode: &str, method: &str, lhs: &str, rhs: &str) -> Result<String, JsValue> {
    diamond_product_impl(mode, method, lhs, rhs).map_err(|e| JsValue::from_str(&e))
}

fn diamond_product_impl(mode: &str, method: &str, lhs: &str, rhs: &str) -> Result<String, String> {
    let alphabet = alphabet_of(mode)?;
    let lhs = parse_polynomial(lhs, alphabet).map_err(err)?;
    let rhs = parse_polynomial(rhs, alphabet).map_err(err)?;
    let product = match method {
        "recursion" => diamond_cached(&lhs, &rhs).map_err(err)?,
        "paths" => {
            let mut total = NcPolynomial::zero(alphabet);
            for (wu, cu) in lhs.terms() {
                for (wv, cv) in rhs.terms() {
                    let part = match alphabet {
                        Alphabet::Ab => sum_weights_ab(wu, wv).map_err(err)?,
                        Alphabet::Cd => sum_weights_cd(wu, wv).map_err(err)?,
                    };
                    total += &part.scale(&(cu * cv));
                }
            }
            total
        }
        other => return Err(err(format!("unknown method {other:?}"))),
    };
    Ok(product.to_string())
}

/// Enumerates a labeled path family and renders it. Returns a JSON document
/// with the path list, per-path weights, the weight total, and an `svg`
/// field holding the figure markup.
#[wasm_bindgen]
pub fn explore_paths(family: &str, u: &str, v: &str) -> Result<String, JsValue> {
    explore_paths_impl(family, u, v).map_err(|e| JsValue::from_str(&e))
}

fn explore_paths_impl(family: &str, u: &str, v: &str) -> Result<String, String> {
    let (alphabet, is_gamma) = match family {
        "gamma" => (Alphabet::Cd, true),
        "omega" => (Alphabet::Ab, false),
        other => return Err(err(format!("unknown family {other:?} (want gamma or omega)"))),
    };
    let u = parse_word(u, alphabet).map_err(err)?;
    let v = parse_word(v, alphabet).map_err(err)?;
    let labels = AxisLabeling::for_alphabet(u.clone(), v.clone(), alphabet).map_err(err)?;
    let paths = if is_gamma {
        enumerate_gamma(&labels)
    } else {
        enumerate_omega(labels.width(), labels.height())
    };
    let mut total = NcPolynomial::zero(alphabet);
    let mut rows = Vec::new();
    for path in &paths {
        let weight = if is_gamma {
            weight_cd(path, &labels).map_err(err)?
        } else {
            weight_ab(path, &labels).map_err(err)?
        };
        rows.push(json!({
            "path": path.steps().iter().map(|s| s.pretty()).collect::<Vec<_>>().join(" "),
            "weight": weight.to_string(),
        }));
        total += &weight;
    }
    let svg = render_paths(&labels, &paths, RenderFormat::Svg).map_err(err)?;
    let doc = json!({
        "family": family,
        "u": u.to_string(),
        "v": v.to_string(),
        "count": paths.len(),
        "paths": rows,
        "total": total.to_string(),
        "svg": svg,
    });
    Ok(doc.to_string())
}

fn build(spec: &str, op: &str, spec2: &str) -> Result<(GradedPoset, String), String> {
    // The page caps sizes well below the library default so a misclick
    // cannot freeze the tab.
    const CAP: usize = 5_000;
    let first = generate(spec, CAP).map_err(err)?;
    match op {
        "" | "none" => Ok((first, spec.to_string())),
        "prism" => Ok((prism_poset(&first), format!("prism({spec})"))),
        "pyramid" => Ok((pyramid_poset(&first), format!("pyramid({spec})"))),
        "diamond" => {
            let second = generate(spec2, CAP).map_err(err)?;
            Ok((
                diamond_product_poset(&first, &second),
                format!("diamond({spec}, {spec2})"),
            ))
        }
        other => Err(err(format!("unknown operation {other:?}"))),
    }
}

/// Generates a poset (optionally applying prism/pyramid/diamond) and
/// returns its invariants as JSON: size, rank, Eulerian flag, cd-index (or
/// null), ab-index, and the flag vector table.
#[wasm_bindgen]
pub fn poset_report(spec: &str, op: &str, spec2: &str) -> Result<String, JsValue> {
    poset_report_impl(spec, op, spec2).map_err(|e| JsValue::from_str(&e))
}

fn poset_report_impl(spec: &str, op: &str, spec2: &str) -> Result<String, String> {
    let (poset, name) = build(spec, op, spec2)?;
    let f = flag_f_vector(&poset);
    let h = flag_h_vector(&f);
    let flags: Vec<serde_json::Value> = (0..f.counts().len())
        .map(|mask| {
            json!({
                "set": FlagVector::set_name(mask),
                "f": f.count(mask).to_string(),
                "h": h.count(mask).to_string(),
            })
        })
        .collect();
    let index = cd_index(&poset);
    let doc = json!({
        "name": name,
        "elements": poset.len(),
        "rank": poset.height(),
        "eulerian": poset.is_eulerian(),
        "cdindex": index.as_ref().map(|p| p.to_string()).ok(),
        "abindex": ab_index(&poset).to_string(),
        "flags": flags,
    });
    Ok(doc.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_text() {
        assert_eq!(
            diamond_product_impl("cd", "recursion", "c", "c").unwrap(),
            "cc + 2*d"
        );
        assert_eq!(diamond_product_impl("cd", "paths", "c", "c").unwrap(), "cc + 2*d");
    }

    #[test]
    fn explorer_reports_the_known_family() {
        let doc: serde_json::Value =
            serde_json::from_str(&explore_paths_impl("gamma", "cd", "dc").unwrap()).unwrap();
        assert_eq!(doc["count"], 13);
        assert!(doc["svg"].as_str().unwrap().starts_with("<svg"));
        assert_eq!(
            doc["total"],
            "ccdcc + ccdd + cdccc + 2*cdcd + 3*cddc + 2*dccd + 4*dcdc + 2*ddcc + 4*ddd"
        );
    }

    #[test]
    fn poset_report_shape() {
        let doc: serde_json::Value =
            serde_json::from_str(&poset_report_impl("boolean:3", "", "").unwrap()).unwrap();
        assert_eq!(doc["cdindex"], "cc + d");
        assert_eq!(doc["eulerian"], true);
        let doc: serde_json::Value =
            serde_json::from_str(&poset_report_impl("chain:3", "", "").unwrap()).unwrap();
        assert_eq!(doc["cdindex"], serde_json::Value::Null);
    }

    #[test]
    fn bad_inputs_are_errors() {
        assert!(diamond_product_impl("cd", "recursion", "ax", "c").is_err());
        assert!(explore_paths_impl("lambda", "c", "c").is_err());
        assert!(poset_report_impl("boolean:19", "", "").is_err());
    }
}
