use std::process::exit;

fn main() {
    // Die silently when the downstream pipe closes (e.g. `sinks orient … | head`),
    // like any Unix text filter, instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    exit(sinks::cli::run(std::env::args_os()));
}
