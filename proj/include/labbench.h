/* labbench - virtual SCPI bench with adaptive sweep tooling.
 *
 * C interface to the bench server, the raw-SCPI client session and the
 * sweep/metrics harness. All functions return lb_status; LB_OK is 0.
 * Handles are opaque and must be released with their destroy/close call.
 * On failure, lb_last_error() returns a per-thread human-readable detail.
 */
#ifndef LABBENCH_H
#define LABBENCH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lb_status {
  LB_OK = 0,
  LB_ERR_INVALID = 1,   /* bad arguments, config or usage */
  LB_ERR_IO = 2,        /* file or socket I/O failure */
  LB_ERR_TIMEOUT = 3,   /* client I/O timeout */
  LB_ERR_NOT_FOUND = 4, /* no instrument matches the selector */
  LB_ERR_AMBIGUOUS = 5, /* selector matches more than one instrument */
  LB_ERR_PROTOCOL = 6,  /* unexpected wire traffic */
  LB_ERR_RUNTIME = 7    /* anything else */
} lb_status;

/* Static name of a status code ("LB_ERR_TIMEOUT"). */
const char *lb_status_str(lb_status s);

/* Copy the calling thread's last error detail into buf (NUL-terminated,
 * truncated to cap). Empty string if the last call succeeded. */
void lb_last_error(char *buf, size_t cap);

/* ---- bench server ------------------------------------------------------ */

typedef struct lb_server lb_server;

/* Start a bench server. config_path may be NULL for the built-in default
 * bench (one EDU36311A PSU, one EDU34450A DMM). Port resolution order:
 * port_override if >= 0, else LABBENCH_PORT env var, else config file,
 * else 5025. Use port 0 for an ephemeral port. */
lb_status lb_server_start(const char *config_path, int port_override,
                          lb_server **out);

/* Actual bound TCP port. */
int lb_server_port(const lb_server *srv);

/* Stop accepting connections, drain queued commands, join all workers.
 * Safe to call more than once. */
lb_status lb_server_shutdown(lb_server *srv);

/* Release the handle (implies shutdown). */
void lb_server_destroy(lb_server *srv);

/* ---- client session ---------------------------------------------------- */

typedef struct lb_session lb_session;

/* Connect and bind one instrument. selector is a serial number or a unique
 * model name, case-insensitive. timeout_ms <= 0 means the 5000 ms default. */
lb_status lb_connect(const char *host, int port, const char *selector,
                     int timeout_ms, lb_session **out);

/* Send one program message containing a query; copies the single response
 * line (without terminator) into reply. */
lb_status lb_query(lb_session *s, const char *line, char *reply, size_t cap);

/* Send one program message that produces no response. */
lb_status lb_command(lb_session *s, const char *line);

/* PSU verbs (session must be bound to a PSU; channel is 1..3). */
lb_status lb_set_voltage(lb_session *s, int channel, double volts);
lb_status lb_set_current_limit(lb_session *s, int channel, double amps);
lb_status lb_set_output(lb_session *s, int channel, int on);

/* DMM verb (session must be bound to a DMM). */
lb_status lb_measure_voltage(lb_session *s, double *volts_out);

void lb_session_close(lb_session *s);

/* Fetch the server's instrument listing without binding: one instrument per
 * line, "<model> <serial> <kind>", NUL-terminated. */
lb_status lb_list(const char *host, int port, int timeout_ms, char *buf,
                  size_t cap);

/* ---- experiment harness ------------------------------------------------ */

typedef struct lb_reference_opts {
  const char *config_path; /* NULL = built-in default bench */
  int points;              /* per curve; default 10000 */
  double vdd;              /* default 3.0 */
  double vbias_lo;         /* default 0.0 */
  double vbias_hi;         /* default 5.0 */
  int vbias_count;         /* default 10 */
} lb_reference_opts;

void lb_reference_opts_init(lb_reference_opts *o);

/* Noiseless direct-model reference sweep; writes CSV (vbias,vin,vout). */
lb_status lb_run_reference(const lb_reference_opts *o, const char *out_csv);

typedef struct lb_sweep_opts {
  const char *host;
  int port;
  const char *mode;       /* "uniform" or "gwass" */
  int points;             /* per-curve budget; default 100 */
  double coarse_fraction; /* gwass only; default 0.2 */
  double epsilon;         /* gwass weight floor ratio; default 0.01 */
  unsigned long long seed;
  double vdd;           /* default 3.0 */
  double current_limit; /* per channel; default 0.1 */
  double vbias_lo;      /* default 0.0 */
  double vbias_hi;      /* default 5.0 */
  int vbias_count;      /* default 10 */
  int timeout_ms;       /* default 5000 */
} lb_sweep_opts;

void lb_sweep_opts_init(lb_sweep_opts *o);

/* Drive a measurement sweep through a running bench server; writes CSV. */
lb_status lb_run_sweep(const lb_sweep_opts *o, const char *out_csv);

/* Compare a run CSV against a reference CSV; writes a JSON report. */
lb_status lb_metrics(const char *run_csv, const char *ref_csv,
                     const char *out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LABBENCH_H */
