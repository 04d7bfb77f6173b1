//! Graph file formats, k-core preprocessing and result records.

mod kcore;
mod metis;
mod results;

pub use kcore::kcore;
pub use metis::{
    parse_metis, read_metis_file, write_metis, write_metis_file, write_metis_to, MetisHeader,
};
pub use results::{emit_results, PhaseSeconds, ResultRecord};
