use std::collections::BTreeMap;

use serde_json::Value;
use thiserror::Error;

use crate::args::RawArgs;
use crate::verbs;

/// Verb failure, split by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input: exit status 2.
    #[error("{0}")]
    Parse(String),
    /// Out-of-range or undetermined request: exit status 3.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<adduce::Error> for CliError {
    fn from(e: adduce::Error) -> Self {
        match e {
            adduce::Error::Parse { .. } => CliError::Parse(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

/// Result of a verb.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub input: Value,
    pub result: Value,
    pub text: String,
    /// Names of the rules the answer rests on.
    pub provenance: Vec<String>,
}

/// A command the front end can dispatch to by name.
pub trait Verb {
    fn name(&self) -> &'static str;

    fn about(&self) -> &'static str;

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError>;
}

/// Verbs keyed by name.
pub struct Registry {
    verbs: BTreeMap<&'static str, Box<dyn Verb>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            verbs: BTreeMap::new(),
        }
    }

    /// Registry with every built-in verb.
    pub fn standard() -> Self {
        let mut r = Registry::empty();
        for v in verbs::all() {
            r.register(v);
        }
        r
    }

    /// Adds a verb, replacing any verb of the same name.
    pub fn register(&mut self, verb: Box<dyn Verb>) {
        self.verbs.insert(verb.name(), verb);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Verb> {
        self.verbs.get(name).map(|v| v.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.verbs.keys().copied()
    }

    pub fn help(&self) -> String {
        let mut out = String::from("Verbs:\n");
        for v in self.verbs.values() {
            out.push_str(&format!("  {:<26}{}\n", v.name(), v.about()));
        }
        out
    }
}
