//! Run transcripts: the verifier's public view of a protocol run, the
//! segregated private record of secret permutations, a public-information
//! simulator and the statistics used to test zero knowledge.
//!
//! Serialized form is line oriented with tab-separated fields (tabs shown as `→`):
//!
//! ```text
//! cardzk-transcript→1
//! protocol→ham
//! seed→7
//! event→vertex 1→STEP3→build→2x3
//! event→vertex 1→STEP4→reveal→H / H
//! ...
//! verdict→accept→ACCEPT_ALL→-
//! ```
//!
//! The full form additionally carries `private` lines after the verdict;
//! the public form never does.

mod simulate;
mod stats;

pub use simulate::simulate_public_view;
pub use stats::{chi_square_test, reveal_distribution, structure_distribution, ChiSquare, RevealDistribution};

use std::fmt;
use std::fmt::Write as _;

use crate::card::SecretPermutation;
use crate::verdict::{Site, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scope {
    Site(Site),
    Global,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Site(s) => s.fmt(f),
            Scope::Global => f.write_str("global"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    Build,
    Hide,
    ScrambleRows,
    ScrambleCols,
    ShiftDown,
    ShiftUp,
    Reveal,
    RevealIndex,
    Restore,
    Restack,
    Redeploy,
    Decide,
}

impl Action {
    pub fn name(self) -> &'static str {
        match self {
            Action::Build => "build",
            Action::Hide => "hide",
            Action::ScrambleRows => "scramble-rows",
            Action::ScrambleCols => "scramble-cols",
            Action::ShiftDown => "shift-down",
            Action::ShiftUp => "shift-up",
            Action::Reveal => "reveal",
            Action::RevealIndex => "reveal-index",
            Action::Restore => "restore",
            Action::Restack => "restack",
            Action::Redeploy => "redeploy",
            Action::Decide => "decide",
        }
    }

    /// Actions whose detail depends on hidden card faces.
    pub fn is_reveal(self) -> bool {
        matches!(self, Action::Reveal | Action::RevealIndex)
    }
}

/// Something every observer of the table sees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PublicEvent {
    pub scope: Scope,
    pub step: &'static str,
    pub action: Action,
    /// Revealed pattern for reveals, structural metadata otherwise.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrivateKind {
    Permutation(SecretPermutation),
    /// Hidden card layout, e.g. the prover's deployment.
    Layout(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrivateEvent {
    pub scope: Scope,
    pub step: &'static str,
    pub kind: PrivateKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub protocol: &'static str,
    pub seed: u64,
    public: Vec<PublicEvent>,
    private: Vec<PrivateEvent>,
    verdict: Option<Verdict>,
}

impl Transcript {
    pub fn new(protocol: &'static str, seed: u64) -> Self {
        Transcript {
            protocol,
            seed,
            public: Vec::new(),
            private: Vec::new(),
            verdict: None,
        }
    }

    pub fn push_public(&mut self, scope: Scope, step: &'static str, action: Action, detail: impl Into<String>) {
        self.public.push(PublicEvent {
            scope,
            step,
            action,
            detail: detail.into(),
        });
    }

    pub fn push_private(&mut self, scope: Scope, step: &'static str, kind: PrivateKind) {
        self.private.push(PrivateEvent { scope, step, kind });
    }

    pub fn set_verdict(&mut self, v: Verdict) {
        self.verdict = Some(v);
    }

    pub fn public_events(&self) -> &[PublicEvent] {
        &self.public
    }

    pub fn private_events(&self) -> &[PrivateEvent] {
        &self.private
    }

    pub fn verdict(&self) -> Option<Verdict> {
        self.verdict
    }

    fn write_public(&self, out: &mut String) {
        let _ = writeln!(out, "cardzk-transcript\t1");
        let _ = writeln!(out, "protocol\t{}", self.protocol);
        let _ = writeln!(out, "seed\t{}", self.seed);
        for e in &self.public {
            let detail = if e.detail.is_empty() { "-" } else { &e.detail };
            let _ = writeln!(out, "event\t{}\t{}\t{}\t{}", e.scope, e.step, e.action.name(), detail);
        }
        match self.verdict {
            Some(v) => {
                let site = v.site.map_or_else(|| "-".to_string(), |s| s.to_string());
                let what = if v.accepted { "accept" } else { "reject" };
                let _ = writeln!(out, "verdict\t{what}\t{}\t{site}", v.step);
            }
            None => {
                let _ = writeln!(out, "verdict\tnone\t-\t-");
            }
        }
    }

    /// The verifier's view: header, public events and verdict only.
    pub fn to_public_text(&self) -> String {
        let mut out = String::new();
        self.write_public(&mut out);
        out
    }

    /// Public view followed by the private section.
    pub fn to_full_text(&self) -> String {
        let mut out = String::new();
        self.write_public(&mut out);
        for p in &self.private {
            let body = match &p.kind {
                PrivateKind::Permutation(perm) => format!("perm\t{perm}"),
                PrivateKind::Layout(text) => format!("layout\t{}", text.replace('\n', ";")),
            };
            let _ = writeln!(out, "private\t{}\t{}\t{body}", p.scope, p.step);
        }
        out
    }
}

/// Picks one event per transcript: the `occurrence`-th public event that
/// matches every constrained field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EventSelector {
    pub scope: Option<Scope>,
    pub step: Option<&'static str>,
    pub action: Option<Action>,
    pub occurrence: usize,
}

impl EventSelector {
    pub fn new(scope: Scope, step: &'static str, action: Action) -> Self {
        EventSelector {
            scope: Some(scope),
            step: Some(step),
            action: Some(action),
            occurrence: 0,
        }
    }

    pub fn nth(mut self, occurrence: usize) -> Self {
        self.occurrence = occurrence;
        self
    }

    pub fn matches(&self, e: &PublicEvent) -> bool {
        self.scope.is_none_or(|s| s == e.scope)
            && self.step.is_none_or(|s| s == e.step)
            && self.action.is_none_or(|a| a == e.action)
    }

    pub fn select<'t>(&self, t: &'t Transcript) -> Option<&'t PublicEvent> {
        t.public.iter().filter(|e| self.matches(e)).nth(self.occurrence)
    }

    /// Every distinct reveal event class occurring in `ts`, keyed by scope,
    /// step, action and occurrence number.
    pub fn reveal_classes<'a>(ts: impl IntoIterator<Item = &'a Transcript>) -> Vec<EventSelector> {
        let mut classes = std::collections::BTreeSet::new();
        for t in ts {
            let mut seen = std::collections::HashMap::new();
            for e in t.public.iter().filter(|e| e.action.is_reveal()) {
                let n = seen.entry((e.scope, e.step, e.action)).or_insert(0usize);
                classes.insert(EventSelector::new(e.scope, e.step, e.action).nth(*n));
                *n += 1;
            }
        }
        classes.into_iter().collect()
    }
}

impl fmt::Display for EventSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let any = "*".to_string();
        write!(
            f,
            "{} {} {} #{}",
            self.scope.map_or(any.clone(), |s| s.to_string()),
            self.step.unwrap_or("*"),
            self.action.map_or("*", Action::name),
            self.occurrence
        )
    }
}
