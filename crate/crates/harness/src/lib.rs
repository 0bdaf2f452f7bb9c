//! Corpus generation, statement verification and reporting.

pub mod corpus;
pub mod discover;
pub mod enumerate;
pub mod ingest;
pub mod report;
pub mod roles;
pub mod sweep;
pub mod verdict;
pub mod verify;

pub use corpus::{
    corpus_generate, corpus_generate_with, standard_corpus, theorem_hypothesis, Family, PlanarBase,
};
pub use discover::statement_inputs;
pub use enumerate::{all_graphs, canonical_code, connected_graphs};
pub use ingest::{ingest, ingest_path, Corpus, Diagnostic, Ingested};
pub use report::{emit_report, ReportFormat, ReportMeta};
pub use roles::{find_roles, RoleAssignment, DEFAULT_ROLE_CAP};
pub use sweep::{run_jobs, sweep, thread_count, Job};
pub use verdict::{
    validate_certificate, validate_verdict, Certificate, Outcome, RestrictedTk5, Statement,
    StatementInput, Verdict,
};
pub use verify::{
    check_hypotheses, verify, verify_lemma, verify_statement, verify_theorem_1_1, VerifyOptions,
};
