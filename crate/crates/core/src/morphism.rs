//! Morphisms of codes determined by families of trunks.
//!
//! A family `(T_1, ..., T_m)` of trunks in `C` determines the map
//! `c ↦ {j : c ∈ T_j}` into `2^[m]`, and every morphism arises this way.
//! Labels are positional; empty and repeated trunks are allowed.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::codeword::{Codeword, MAX_INDEX};
use crate::error::{CodeError, MorphismError};
use crate::trunk::Trunk;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Code,
    family: Vec<Trunk>,
}

impl Morphism {
    pub fn new(source: Code, family: Vec<Trunk>) -> Result<Self, MorphismError> {
        if family.len() > MAX_INDEX {
            return Err(CodeError::UniverseTooLarge(family.len()).into());
        }
        for (k, t) in family.iter().enumerate() {
            match source.is_trunk(t.members()) {
                Ok(Some(_)) => {}
                Ok(None) | Err(CodeError::NotAMember { .. }) => {
                    return Err(MorphismError::NotATrunk { label: k + 1 })
                }
                Err(e) => return Err(e.into()),
            }
        }
        Ok(Morphism { source, family })
    }

    /// Family given by defining sets; `None` stands for the empty trunk.
    pub fn from_sigmas(source: Code, sigmas: &[Option<Codeword>]) -> Result<Self, MorphismError> {
        let family = sigmas
            .iter()
            .map(|s| match s {
                Some(sigma) => source.trunk(*sigma),
                None => Ok(Trunk::empty()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Morphism::new(source, family)
    }

    /// The family `(Tk(1), ..., Tk(n))`, which maps every word to itself.
    pub fn identity(source: Code) -> Self {
        let family = (1..=source.n())
            .map(|i| source.simple_trunk(i).expect("index in range"))
            .collect();
        Morphism { source, family }
    }

    pub fn source(&self) -> &Code {
        &self.source
    }

    pub fn family(&self) -> &[Trunk] {
        &self.family
    }

    pub fn target_n(&self) -> usize {
        self.family.len()
    }

    pub fn apply(&self, c: Codeword) -> Result<Codeword, MorphismError> {
        if !self.source.contains(c) {
            return Err(CodeError::NotAMember { word: c }.into());
        }
        Ok(self.image_of(c))
    }

    fn image_of(&self, c: Codeword) -> Codeword {
        let mut bits = 0u64;
        for (k, t) in self.family.iter().enumerate() {
            if t.contains(c) {
                bits |= 1 << k;
            }
        }
        Codeword::from_bits(bits)
    }

    /// `f(C)` as a code over `[m]`.
    pub fn image(&self) -> Code {
        Code::new(
            self.target_n(),
            self.source.iter().map(|c| self.image_of(c)),
        )
        .expect("image lies in [m]")
    }

    /// `f(S)` for a set of source words.
    pub fn image_of_set(&self, set: &BTreeSet<Codeword>) -> BTreeSet<Codeword> {
        set.iter().map(|&c| self.image_of(c)).collect()
    }

    pub fn table(&self) -> BTreeMap<Codeword, Codeword> {
        self.source.iter().map(|c| (c, self.image_of(c))).collect()
    }

    /// `f⁻¹(T)` for a trunk `T` of the image; always a trunk of the source.
    pub fn preimage_trunk(&self, t: &Trunk) -> Result<Trunk, MorphismError> {
        let image = self.image();
        if image.is_trunk(t.members())?.is_none() {
            return Err(CodeError::NotATrunk.into());
        }
        let members: BTreeSet<Codeword> = self
            .source
            .iter()
            .filter(|&c| t.contains(self.image_of(c)))
            .collect();
        let witness = self
            .source
            .is_trunk(&members)?
            .expect("preimage of a trunk under a morphism is a trunk");
        Ok(witness)
    }

    /// `self ∘ inner`, i.e. `c ↦ self(inner(c))`, as a table on `inner`'s source.
    pub fn compose_after(
        &self,
        inner: &Morphism,
    ) -> Result<BTreeMap<Codeword, Codeword>, MorphismError> {
        inner
            .source
            .iter()
            .map(|c| Ok((c, self.apply(inner.image_of(c))?)))
            .collect()
    }
}

/// Checks the morphism definition directly: the preimage of every trunk of
/// `target` must be a trunk of `source`.
pub fn validate_morphism(
    source: &Code,
    target: &Code,
    mapping: &BTreeMap<Codeword, Codeword>,
) -> Result<bool, MorphismError> {
    for c in source.iter() {
        match mapping.get(&c) {
            None => return Err(MorphismError::NotTotal { word: c }),
            Some(d) if !target.contains(*d) => {
                return Err(MorphismError::OutsideTarget { word: *d })
            }
            Some(_) => {}
        }
    }
    if let Some(extra) = mapping.keys().find(|c| !source.contains(**c)) {
        return Err(CodeError::NotAMember { word: *extra }.into());
    }
    for t in target.all_trunks() {
        let pre: BTreeSet<Codeword> = source.iter().filter(|c| t.contains(mapping[c])).collect();
        if source.is_trunk(&pre)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `T` is generated by the family when `⋂{T_j : T ⊆ T_j} = T`. The empty
/// intersection is the whole code.
pub fn generated_by(code: &Code, t: &Trunk, family: &[Trunk]) -> Result<bool, MorphismError> {
    code.ensure_trunk(t)?;
    for (k, s) in family.iter().enumerate() {
        if code.is_trunk(s.members()).ok().flatten().is_none() {
            return Err(MorphismError::NotATrunk { label: k + 1 });
        }
    }
    Ok(closure_in(code, t, family) == *t.members())
}

fn closure_in(code: &Code, t: &Trunk, family: &[Trunk]) -> BTreeSet<Codeword> {
    let mut acc = code.words().clone();
    for s in family.iter().filter(|s| t.is_subset(s)) {
        acc.retain(|w| s.contains(*w));
    }
    acc
}

#[derive(Clone, Debug)]
pub struct FactoringResult {
    pub exists: bool,
    /// `h` with `g = h ∘ f`, defined on `f(C)`.
    pub mediator: Option<Morphism>,
}

/// Decides whether `g` factors as `h ∘ f` and builds `h` when it does.
///
/// `h` is determined by the trunks `Q_k = f(S_k)`. When `S_k` is nonempty it
/// must be generated by `f`'s family, and then `Q_k = Tk_{f(C)}(σ_k)` with
/// `σ_k = {j : S_k ⊆ T_j}`. An empty `S_k` pulls back from the empty trunk and
/// needs no generation.
pub fn factors_through(f: &Morphism, g: &Morphism) -> Result<FactoringResult, MorphismError> {
    if f.source != g.source {
        return Err(MorphismError::SourceMismatch);
    }
    let code = &f.source;
    let image = f.image();
    let mut q = Vec::with_capacity(g.family.len());
    for s in &g.family {
        if s.is_empty() {
            q.push(Trunk::empty());
            continue;
        }
        if closure_in(code, s, &f.family) != *s.members() {
            return Ok(FactoringResult {
                exists: false,
                mediator: None,
            });
        }
        let sigma = Codeword::from_indices(
            f.family
                .iter()
                .enumerate()
                .filter(|(_, t)| s.is_subset(t))
                .map(|(j, _)| j + 1),
        )?;
        q.push(image.trunk(sigma)?);
    }
    let h = Morphism::new(image, q)?;
    Ok(FactoringResult {
        exists: true,
        mediator: Some(h),
    })
}

/// Drops, in ascending label order, every member generated by the members
/// still present. The image changes only up to isomorphism.
pub fn minimize_family(code: &Code, family: &[Trunk]) -> Result<Vec<Trunk>, MorphismError> {
    for (k, s) in family.iter().enumerate() {
        if code.is_trunk(s.members()).ok().flatten().is_none() {
            return Err(MorphismError::NotATrunk { label: k + 1 });
        }
    }
    let mut kept: Vec<Trunk> = family.to_vec();
    let mut k = 0;
    while k < kept.len() {
        let candidate = kept[k].clone();
        let others: Vec<Trunk> = kept
            .iter()
            .enumerate()
            .filter(|(idx, _)| *idx != k)
            .map(|(_, t)| t.clone())
            .collect();
        if closure_in(code, &candidate, &others) == *candidate.members() {
            kept.remove(k);
        } else {
            k += 1;
        }
    }
    Ok(kept)
}

/// File form of a morphism: defining sets relative to a code supplied alongside,
/// `null` for the empty trunk.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MorphismSpec {
    pub family: Vec<Option<Codeword>>,
}

impl MorphismSpec {
    pub fn parse_json(text: &str) -> Result<Self, MorphismError> {
        serde_json::from_str(text).map_err(|e| CodeError::Parse(e.to_string()).into())
    }

    pub fn build(&self, source: Code) -> Result<Morphism, MorphismError> {
        Morphism::from_sigmas(source, &self.family)
    }

    pub fn of(m: &Morphism) -> Self {
        MorphismSpec {
            family: m.family.iter().map(Trunk::sigma).collect(),
        }
    }
}
