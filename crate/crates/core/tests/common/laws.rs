//! Morphism laws checked against direct set computations.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use codebench::morphism::validate_morphism;
use codebench::{Code, Codeword, Morphism};

use super::{brute_all_trunks, brute_is_trunk, brute_trunk};

/// A morphism whose family mixes random trunks `Tk(σ)` with the occasional
/// empty trunk.
pub fn random_morphism<R: Rng>(
    rng: &mut R,
    code: &Code,
    max_labels: usize,
    allow_empty: bool,
) -> Morphism {
    let m = rng.gen_range(1..=max_labels);
    let sigmas: Vec<Option<Codeword>> = (0..m)
        .map(|_| {
            if allow_empty && rng.gen_ratio(1, 8) {
                None
            } else {
                Some(Codeword::from_bits(rng.gen_range(0..1u64 << code.n())))
            }
        })
        .collect();
    Morphism::from_sigmas(code.clone(), &sigmas).expect("trunks of the source")
}

/// Nonempty trunks only, as needed by criteria phrased through defining sets.
pub fn random_nonempty_morphism<R: Rng>(rng: &mut R, code: &Code, max_labels: usize) -> Morphism {
    let m = rng.gen_range(1..=max_labels);
    let sigmas: Vec<Option<Codeword>> = (0..m)
        .map(|_| loop {
            let s = rng.gen_range(0..1u64 << code.n());
            if !brute_trunk(code, s).is_empty() {
                break Some(Codeword::from_bits(s));
            }
        })
        .collect();
    Morphism::from_sigmas(code.clone(), &sigmas).expect("trunks of the source")
}

fn image_by_table(m: &Morphism, words: &BTreeSet<Codeword>) -> BTreeSet<Codeword> {
    words.iter().map(|&c| m.apply(c).unwrap()).collect()
}

pub fn monotone(m: &Morphism) -> Result<(), String> {
    let words: Vec<Codeword> = m.source().iter().collect();
    for &a in &words {
        for &b in &words {
            if a.is_subset(b) && !m.apply(a).unwrap().is_subset(m.apply(b).unwrap()) {
                return Err(format!("{a} ⊆ {b} but images are not nested"));
            }
        }
    }
    Ok(())
}

/// `f(⋂_{j∈σ} T_j) = ⋂_{j∈σ} f(T_j)` for every set of labels `σ`.
pub fn preserves_intersections(m: &Morphism) -> Result<(), String> {
    let family = m.family();
    let all = m.source().words().clone();
    let image_all = image_by_table(m, &all);
    let images: Vec<BTreeSet<Codeword>> = family
        .iter()
        .map(|t| image_by_table(m, t.members()))
        .collect();
    for labels in 0u64..1 << family.len() {
        let mut meet = all.clone();
        let mut image_meet = image_all.clone();
        for j in (0..family.len()).filter(|j| labels >> j & 1 == 1) {
            meet.retain(|c| family[j].contains(*c));
            image_meet.retain(|c| images[j].contains(c));
        }
        if image_by_table(m, &meet) != image_meet {
            return Err(format!("labels {labels:b}: f(⋂T) ≠ ⋂f(T)"));
        }
    }
    Ok(())
}

/// Preimages of all trunks of the image are trunks of the source, and the
/// library's preimage agrees with the direct one.
pub fn preimages_are_trunks(m: &Morphism) -> Result<(), String> {
    let image = m.image();
    for t in brute_all_trunks(&image) {
        let pre: BTreeSet<Codeword> = m
            .source()
            .iter()
            .filter(|&c| t.contains(&m.apply(c).unwrap()))
            .collect();
        if !brute_is_trunk(m.source(), &pre) {
            return Err(format!("preimage {pre:?} of {t:?} is not a trunk"));
        }
        let as_trunk = image.is_trunk(&t).unwrap().expect("listed trunk");
        let lib = m.preimage_trunk(&as_trunk).map_err(|e| e.to_string())?;
        if *lib.members() != pre {
            return Err(format!("library preimage of {t:?} differs"));
        }
    }
    Ok(())
}

/// A map is a morphism exactly when it is determined by a trunk family,
/// namely the pullbacks of the target's simple trunks. Compares
/// `validate_morphism` with that characterization.
pub fn validation_matches_reconstruction(
    source: &Code,
    target: &Code,
    mapping: &BTreeMap<Codeword, Codeword>,
) -> Result<bool, String> {
    let valid = validate_morphism(source, target, mapping).map_err(|e| e.to_string())?;
    let pullbacks: Vec<BTreeSet<Codeword>> = (1..=target.n())
        .map(|j| source.iter().filter(|c| mapping[c].contains(j)).collect())
        .collect();
    let determined = pullbacks.iter().all(|p| brute_is_trunk(source, p));
    if valid != determined {
        return Err(format!(
            "validate says {valid}, reconstruction says {determined}"
        ));
    }
    if determined {
        let family = pullbacks
            .iter()
            .map(|p| source.is_trunk(p).unwrap().unwrap())
            .collect();
        let rebuilt = Morphism::new(source.clone(), family).map_err(|e| e.to_string())?;
        if rebuilt.table() != *mapping {
            return Err("reconstructed morphism differs from the mapping".into());
        }
    }
    Ok(valid)
}

pub fn all_laws(m: &Morphism) -> Result<(), String> {
    monotone(m)?;
    preserves_intersections(m)?;
    preimages_are_trunks(m)?;
    let table = m.table();
    if !validation_matches_reconstruction(m.source(), &m.image(), &table)? {
        return Err("a trunk-determined map failed validation".into());
    }
    Ok(())
}

/// Calls `f` on every map from the words of `source` into the words of `target`.
pub fn for_each_map(
    source: &Code,
    target: &Code,
    mut f: impl FnMut(&BTreeMap<Codeword, Codeword>),
) {
    let from: Vec<Codeword> = source.iter().collect();
    let to: Vec<Codeword> = target.iter().collect();
    if to.is_empty() && !from.is_empty() {
        return;
    }
    let mut digits = vec![0usize; from.len()];
    loop {
        let mapping: BTreeMap<Codeword, Codeword> = from
            .iter()
            .zip(&digits)
            .map(|(&c, &k)| (c, to[k]))
            .collect();
        f(&mapping);
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return;
            }
            digits[pos] += 1;
            if digits[pos] < to.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}
