pub mod io;
pub mod record;
pub mod svg;
