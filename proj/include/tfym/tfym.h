#ifndef TFYM_H
#define TFYM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TFYM_API __declspec(dllexport)
#else
#define TFYM_API __attribute__((visibility("default")))
#endif

typedef enum tfym_status {
  TFYM_OK = 0,
  TFYM_ERR_IO = 1,
  TFYM_ERR_CONFIG = 2,
  TFYM_ERR_STRUCTURAL = 3,
  TFYM_ERR_PRECONDITION = 4,
  TFYM_ERR_COMPOSITION = 5,
  TFYM_ERR_CONSTRUCTION = 6,
  TFYM_ERR_INVALID_ARGUMENT = 7,
  TFYM_ERR_INTERNAL = 8
} tfym_status;

typedef struct tfym_instance tfym_instance;
typedef struct tfym_report tfym_report;

/* Negative integers mean "use the instance default". */
typedef struct tfym_options {
  int seeds;
  int degree_cap;
  int dim;
  int float_sweep;
  int fake_flat;
  int threads;
  const char* connection_text; /* forms text with A, B, C; may be NULL */
} tfym_options;

TFYM_API const char* tfym_version(void);

/* Message of the last failed call on this thread; empty if none. */
TFYM_API const char* tfym_last_error(void);

TFYM_API tfym_status tfym_instance_load(const char* path, tfym_instance** out);
TFYM_API tfym_status tfym_instance_parse(const char* json_text, tfym_instance** out);
TFYM_API void tfym_instance_free(tfym_instance* inst);
TFYM_API const char* tfym_instance_name(const tfym_instance* inst);

TFYM_API void tfym_options_init(tfym_options* opt);

/* command: verify, bianchi, gradcheck, action or reduce */
TFYM_API tfym_status tfym_run(const tfym_instance* inst, const char* command, const tfym_options* opt,
                              tfym_report** out);

TFYM_API int tfym_report_passed(const tfym_report* rep);
/* Strings stay valid until tfym_report_free. */
TFYM_API const char* tfym_report_json(tfym_report* rep, int with_timing);
TFYM_API const char* tfym_report_csv(tfym_report* rep);
TFYM_API const char* tfym_report_forms(const tfym_report* rep);
TFYM_API void tfym_report_free(tfym_report* rep);

#ifdef __cplusplus
}
#endif

#endif
