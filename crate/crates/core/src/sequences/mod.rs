//! Tau sequences: generation in each coordinate system, coordinate changes,
//! relation checks, zero data and the continuum limit.

pub mod casoratian;
pub mod convert;
pub mod dodgson;
mod error;
pub mod generate;
pub mod jacobi;
pub mod limit;
pub mod relation;
pub mod step;
mod tau;
pub mod xseq;
pub mod zero_data;

pub use casoratian::{casoratian, q_det3, sym_casoratian};
pub use convert::{q_from_t, t_from_q, ConversionTable};
pub use dodgson::{phi, to_dodgson_r};
pub use error::SequenceError;
pub use generate::{chain_q, chain_r, conversion_table, gen_p_c, gen_q_q, gen_q_t, gen_q_t_checked, QRoute};
pub use limit::{continuum_limit, kdv_times};
pub use relation::{verify_relation, Relation, RelationReport, Residual};
pub use step::{step_bch, step_dbch, step_dodgson};
pub use tau::{TauKind, TauSequence};
pub use xseq::{even_gauge, gen_x, t_from_x, x_det, Gauge, XSequence};
pub use zero_data::{q0_chain, q0_closed, q0_from_casoratian, sym_casoratian_constant};
