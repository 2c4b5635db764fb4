//! The DFA document format:
//! `{"states":3,"alphabet":["a","b","c"],"initial":0,"finals":[2],"transitions":{"a":[1,2,0],...}}`.

use indexmap::IndexMap;
use pcx_core::Dfa;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaDoc {
    states: usize,
    alphabet: Vec<String>,
    initial: usize,
    finals: Vec<usize>,
    transitions: IndexMap<String, Vec<usize>>,
}

fn parse_error(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

pub fn parse_dfa(text: &str) -> Result<Dfa, CliError> {
    let doc: DfaDoc = serde_json::from_str(text).map_err(|e| parse_error(format!("malformed DFA JSON: {e}")))?;
    if let Some(extra) = doc.transitions.keys().find(|l| !doc.alphabet.contains(l)) {
        return Err(parse_error(format!("transitions: letter `{extra}` is not in alphabet")));
    }
    let mut delta = Vec::with_capacity(doc.alphabet.len());
    for letter in &doc.alphabet {
        let row = doc
            .transitions
            .get(letter)
            .ok_or_else(|| parse_error(format!("transitions: missing row for letter `{letter}`")))?;
        delta.push(row.clone());
    }
    Dfa::new(doc.states, doc.alphabet, delta, doc.initial, doc.finals).map_err(|e| parse_error(e.to_string()))
}

pub fn serialize_dfa(d: &Dfa) -> String {
    let doc = DfaDoc {
        states: d.state_count(),
        alphabet: d.alphabet().to_vec(),
        initial: d.initial(),
        finals: d.finals(),
        transitions: d.alphabet().iter().cloned().zip(d.transitions().iter().cloned()).collect(),
    };
    serde_json::to_string(&doc).expect("DFA documents always serialize")
}
