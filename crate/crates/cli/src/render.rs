//! Text and JSON rendering for every subcommand.

use std::fmt::Write;

use anyhow::Result;
use serde::Serialize;
use serde_json::json;

use codebench::covering::{Child, ChildKind, CoverStatus};
use codebench::geometry::rational::format_point;
use codebench::geometry::{
    is_sunflower, region_difference_witness, ColorfulOutcome, ColorfulReport, FeasibilityOutcome,
    HarnessReport, OpenPolyhedron, Point, SliceVerdict, TheoremCheck,
};
use codebench::reduce::Isomorphism;
use codebench::{Code, Codeword, MaxIntersectionReport, Reduction, SimplicialComplex};

use crate::Format;

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn point(p: &[codebench::geometry::Rational]) -> String {
    format!("({})", format_point(p).join(", "))
}

fn words<'a>(ws: impl IntoIterator<Item = &'a Codeword>) -> String {
    let items: Vec<String> = ws.into_iter().map(|w| format!("{{{w}}}")).collect();
    if items.is_empty() {
        "(none)".into()
    } else {
        items.join(" ")
    }
}

pub fn code(c: &Code, f: Format) -> String {
    match f {
        Format::Text => c.to_text(),
        Format::Json => c.to_json() + "\n",
    }
}

pub fn trunks(c: &Code, f: Format) -> String {
    let all = c.all_trunks();
    match f {
        Format::Text => {
            let mut s = format!("{} trunks\n", all.len());
            for t in &all {
                let sigma = t
                    .sigma()
                    .map_or_else(|| "empty".to_string(), |w| format!("Tk({w})"));
                let _ = writeln!(s, "{sigma:<12} {}", words(t.members()));
            }
            s
        }
        Format::Json => pretty(&json!({ "count": all.len(), "trunks": all })),
    }
}

pub fn reduction(r: &Reduction, f: Format) -> String {
    match f {
        Format::Text => {
            let idx = |v: &[usize]| {
                if v.is_empty() {
                    "-".to_string()
                } else {
                    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                }
            };
            format!(
                "# trivial {}\n# redundant {}\n# kept {}\n{}",
                idx(&r.trivial),
                idx(&r.redundant),
                idx(&r.kept),
                r.code.to_text()
            )
        }
        Format::Json => pretty(r),
    }
}

pub fn iso(m: Option<&Isomorphism>, f: Format) -> String {
    match f {
        Format::Text => match m {
            Some(m) => {
                let pairs: Vec<String> = m
                    .perm
                    .iter()
                    .enumerate()
                    .map(|(i, j)| format!("{}->{j}", i + 1))
                    .collect();
                format!("isomorphic\nperm {}\n", pairs.join(" "))
            }
            None => "not isomorphic\n".into(),
        },
        Format::Json => pretty(&json!({ "isomorphic": m.is_some(), "witness": m })),
    }
}

pub fn mic(r: &MaxIntersectionReport, f: Format) -> String {
    match f {
        Format::Text => {
            let mut s = format!(
                "{}\n",
                if r.is_complete() {
                    "complete"
                } else {
                    "incomplete"
                }
            );
            let _ = writeln!(s, "maximal {}", words(&r.maximal));
            let _ = writeln!(s, "missing {}", words(&r.missing));
            s
        }
        Format::Json => pretty(&json!({
            "complete": r.is_complete(),
            "maximal": r.maximal,
            "closure": r.closure,
            "missing": r.missing,
        })),
    }
}

pub fn missing(r: &MaxIntersectionReport, f: Format) -> String {
    match f {
        Format::Text => {
            let mut s = format!("{} missing\n", r.missing.len());
            for w in &r.missing {
                let _ = writeln!(s, "{w}");
            }
            s
        }
        Format::Json => pretty(&json!({ "count": r.missing.len(), "missing": r.missing })),
    }
}

pub fn complex(k: &SimplicialComplex, link: Option<Codeword>, f: Format) -> String {
    let facets = k.facets();
    match f {
        Format::Text => {
            let mut s = String::new();
            if let Some(face) = link {
                let _ = writeln!(s, "link of {{{face}}}");
            }
            let _ = writeln!(s, "{} faces, {} facets", k.faces().len(), facets.len());
            for w in &facets {
                let _ = writeln!(s, "{w}");
            }
            s
        }
        Format::Json => pretty(&json!({
            "n": k.n(),
            "link_of": link,
            "faces": k.faces(),
            "facets": facets,
        })),
    }
}

pub fn covered_all(all: &[(usize, Code)], f: Format) -> String {
    match f {
        Format::Text => {
            let mut s = String::new();
            for (i, c) in all {
                let _ = writeln!(
                    s,
                    "# covered {i}: {} words, {} trunks",
                    c.len(),
                    c.trunk_count()
                );
                s.push_str(&c.to_text());
            }
            s
        }
        Format::Json => {
            let items: Vec<_> = all
                .iter()
                .map(|(i, c)| json!({ "index": i, "trunk_count": c.trunk_count(), "code": c }))
                .collect();
            pretty(&items)
        }
    }
}

pub fn children(cs: &[Child], f: Format) -> String {
    match f {
        Format::Text => {
            let mut s = String::new();
            for c in cs {
                let kind = match &c.kind {
                    ChildKind::Covered(index) => format!("covered {index}"),
                    ChildKind::SimpleTrunk(index) => format!("simple-trunk {index}"),
                };
                let status = match c.status {
                    CoverStatus::Cover => "cover",
                    CoverStatus::CandidateOnly => "candidate-only",
                };
                let refuted = if c.refuted_by.is_some() {
                    " refuted"
                } else {
                    ""
                };
                let _ = writeln!(
                    s,
                    "# {kind}: {status}{refuted}, {} words, {} trunks",
                    c.code.len(),
                    c.trunk_count
                );
                s.push_str(&c.code.to_text());
            }
            s
        }
        Format::Json => pretty(&cs),
    }
}

pub fn realization_code(c: &Code, f: Format) -> String {
    match f {
        Format::Text => {
            let nerve = c.delta();
            let mut s = c.to_text();
            let _ = writeln!(s, "# nerve facets {}", words(&nerve.facets()));
            s
        }
        Format::Json => pretty(&json!({ "code": c, "nerve": c.delta() })),
    }
}

/// Sunflower status plus a witness for the failure, if any.
#[derive(Serialize)]
pub struct SunflowerCheck {
    pub is_sunflower: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    center_witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

pub fn sunflower(sets: &[OpenPolyhedron]) -> Result<SunflowerCheck> {
    if let Some(center) = is_sunflower(sets)? {
        return Ok(SunflowerCheck {
            is_sunflower: true,
            center_witness: center.witness().map(|w| format_point(&w)),
            reason: None,
            pair: None,
            witness: None,
        });
    }
    let mut center = sets[0].clone();
    for s in &sets[1..] {
        center = center.intersect(s)?;
    }
    let mut check = SunflowerCheck {
        is_sunflower: false,
        center_witness: None,
        reason: Some("empty center".into()),
        pair: None,
        witness: None,
    };
    if center.is_empty() {
        return Ok(check);
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let pair = sets[i].intersect(&sets[j])?;
            if let Some(w) = region_difference_witness(&pair, &center)? {
                check.reason = Some("pairwise intersection leaves the center".into());
                check.pair = Some([i + 1, j + 1]);
                check.witness = Some(format_point(&w));
                return Ok(check);
            }
        }
    }
    Ok(check)
}

pub fn sunflower_text(c: &SunflowerCheck, f: Format) -> String {
    match f {
        Format::Text => {
            if c.is_sunflower {
                let w = c.center_witness.as_deref().unwrap_or_default().join(", ");
                format!("sunflower\ncenter point ({w})\n")
            } else {
                let mut s = format!("not a sunflower: {}\n", c.reason.as_deref().unwrap_or(""));
                if let (Some([i, j]), Some(w)) = (c.pair, &c.witness) {
                    let _ = writeln!(
                        s,
                        "U_{i} ∩ U_{j} contains ({}) outside the center",
                        w.join(", ")
                    );
                }
                s
            }
        }
        Format::Json => pretty(c),
    }
}

fn verdict_text(v: &SliceVerdict) -> String {
    match v {
        SliceVerdict::Holds { witness } => format!("holds\ncenter point {}\n", point(witness)),
        SliceVerdict::NotApplicable { missed_petal } => {
            format!("not-applicable\nmisses petal {missed_petal}\n")
        }
        SliceVerdict::Counterexample { petal_witnesses } => {
            let mut s = "counterexample\n".to_string();
            for (k, w) in petal_witnesses.iter().enumerate() {
                let _ = writeln!(s, "petal {} at {}", k + 1, point(w));
            }
            s
        }
    }
}

pub fn theorem(c: &TheoremCheck, f: Format) -> String {
    match f {
        Format::Text => {
            let mut s = verdict_text(&c.verdict);
            if !c.in_hypothesis {
                s.push_str("note: fewer than d+1 petals\n");
            }
            s
        }
        Format::Json => pretty(c),
    }
}

pub fn slice(v: &SliceVerdict, f: Format) -> String {
    match f {
        Format::Text => verdict_text(v),
        Format::Json => pretty(v),
    }
}

pub fn colorful(o: &ColorfulOutcome, f: Format) -> String {
    match f {
        Format::Text => match (&o.weights, &o.point) {
            (Some(lambda), Some(p)) => {
                format!("holds\nweights {}\npoint {}\n", point(lambda), point(p))
            }
            _ => "fails\n".into(),
        },
        Format::Json => pretty(o),
    }
}

pub fn colorful_harness(r: &ColorfulReport, f: Format) -> String {
    match f {
        Format::Text => format!(
            "draws {}\nseed {}\nholds {}\nfailures {}\n",
            r.draws, r.seed, r.holds, r.failures
        ),
        Format::Json => pretty(r),
    }
}

pub fn harness(r: &HarnessReport, petals: usize, dim: usize, f: Format) -> String {
    match f {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "petals {petals}, dimension {dim}, in hypothesis {}",
                r.in_hypothesis
            );
            let _ = writeln!(s, "trials           {}", r.trials);
            let _ = writeln!(s, "seed             {}", r.seed);
            let _ = writeln!(s, "applicable       {}", r.applicable);
            let _ = writeln!(s, "holds            {}", r.holds);
            let _ = writeln!(s, "not applicable   {}", r.not_applicable);
            let _ = writeln!(s, "counterexamples  {}", r.counterexamples);
            let _ = writeln!(s, "skipped          {}", r.skipped);
            for h in &r.counterexample_hyperplanes {
                let _ = writeln!(s, "  normal {} offset {}", point(h.normal()), h.offset());
            }
            s
        }
        Format::Json => pretty(r),
    }
}

pub fn feasibility(o: &FeasibilityOutcome, f: Format) -> String {
    let witness: Option<Vec<String>> = o.witness.as_ref().map(|w: &Point| format_point(w));
    match f {
        Format::Text => match &witness {
            Some(w) => format!("feasible\nwitness ({})\nslack {}\n", w.join(", "), o.slack),
            None => "infeasible\n".into(),
        },
        Format::Json => pretty(&json!({
            "feasible": o.feasible,
            "witness": witness,
            "slack": o.slack.to_string(),
        })),
    }
}
