use serde::{Deserialize, Serialize};

use super::BruhatOrder;
use crate::cartan::parse_type;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::weyl::Elem;

/// A downward-closed subset of a Weyl group.
///
/// Constructed through [`BruhatOrder`], which validates closure; the empty
/// set and the whole group are legal values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    members: ElementSet,
}

impl Ideal {
    pub(crate) fn from_set_unchecked(members: ElementSet) -> Self {
        Self { members }
    }

    pub fn empty(order: usize) -> Self {
        Self::from_set_unchecked(ElementSet::empty(order))
    }

    pub fn full(order: usize) -> Self {
        Self::from_set_unchecked(ElementSet::full(order))
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in id order (equivalently, by length).
    pub fn elements(&self) -> Vec<Elem> {
        self.members.iter().collect()
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal{:?}", self.members)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub slim: bool,
    pub fat: bool,
    pub balanced: bool,
}

/// JSON form of an ideal: the Cartan type and the reduced words of its
/// minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDoc {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub generators: Vec<Vec<usize>>,
}

impl BruhatOrder {
    pub fn ideal_to_doc(&self, ideal: &Ideal) -> Result<IdealDoc> {
        Ok(IdealDoc {
            cartan_type: self.group().cartan_type().to_string(),
            generators: self
                .generator_words(ideal)?
                .into_iter()
                .map(|w| w.0)
                .collect(),
        })
    }

    pub fn ideal_from_doc(&self, doc: &IdealDoc) -> Result<Ideal> {
        let t = parse_type(&doc.cartan_type)?;
        if &t != self.group().cartan_type() {
            return Err(Error::precondition(format!(
                "ideal is over {t}, group is {}",
                self.group().cartan_type()
            )));
        }
        let gens = doc
            .generators
            .iter()
            .map(|w| self.group().try_evaluate(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.ideal_generated_by(&gens))
    }
}
