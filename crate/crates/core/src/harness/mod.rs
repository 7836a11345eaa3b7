//! Random instance generation and the verification suites that tie the
//! other modules together.

mod random;
mod report;
mod verify;

pub use random::{linear_edge_cap, random_connected_linear, random_linear_hypergraph, RandomSample, FAILURE_BUDGET};
pub use report::{canonicalize, render_records, render_table, Check, VerificationReport};
pub use verify::{
    containment_reports, design_corpus, expansion_reports, expansion_test_graphs, freeness_reports, hypergraph_reports,
    random_corpus, turan_reports, verify_all, verify_hypergraph, CorpusConfig, Instance, VerifyConfig, GREEDY_CASES,
};
