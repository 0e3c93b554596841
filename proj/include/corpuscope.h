/* corpuscope -- corpus comparability and cross-corpus classification toolkit.
 *
 * C interface of the shared library. All objects are opaque handles; every
 * fallible call returns a corpuscope_status and leaves a message retrievable
 * through corpuscope_last_error() (thread-local). Strings returned through
 * out-parameters are owned by the caller and released with
 * corpuscope_string_free().
 */

#ifndef CORPUSCOPE_H
#define CORPUSCOPE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum corpuscope_status {
    CORPUSCOPE_OK = 0,
    CORPUSCOPE_ERR_INVALID_ARGUMENT = 1,
    CORPUSCOPE_ERR_IO = 2,
    CORPUSCOPE_ERR_PARSE = 3,
    CORPUSCOPE_ERR_DATA = 4,
    CORPUSCOPE_ERR_INTERNAL = 5
} corpuscope_status;

typedef enum corpuscope_format {
    CORPUSCOPE_FORMAT_CSV = 0,
    CORPUSCOPE_FORMAT_JSON = 1
} corpuscope_format;

/* A loaded corpus. */
typedef struct corpuscope_corpus corpuscope_corpus;

const char* corpuscope_version(void);

/* Message of the most recent failure on this thread; empty string if none. */
const char* corpuscope_last_error(void);

void corpuscope_string_free(char* text);

/* Loads a line-delimited JSON corpus. name may be NULL (file stem used). */
corpuscope_status corpuscope_corpus_open(const char* path, const char* name,
                                         corpuscope_corpus** out);

void corpuscope_corpus_free(corpuscope_corpus* corpus);

corpuscope_status corpuscope_corpus_post_count(const corpuscope_corpus* corpus, size_t* out);

/* Keeps posts whose annotations agree under the rule ("unanimous" or
 * "strict-majority"); resolved labels are filled in. */
corpuscope_status corpuscope_corpus_filter(const corpuscope_corpus* corpus, const char* rule,
                                           corpuscope_corpus** out);

/* Options for the report calls. Initialize with corpuscope_options_init and
 * override fields as needed. Unused fields are ignored by each report. */
typedef struct corpuscope_options {
    corpuscope_format format;
    /* "unanimous" | "strict-majority" | NULL. When set, corpora are reduced
     * to unambiguous posts before any computation. Classification reports
     * always resolve labels (defaulting to unanimous). */
    const char* ambiguity_rule;
    const char* stopwords_path;          /* NULL: built-in English list */
    const char* const* lexicon_paths;
    size_t lexicon_count;
    unsigned long long mid_threshold;    /* default 4 */
    unsigned long long bow_min_count;    /* default 2 */
    size_t folds;                        /* default 10 */
    unsigned long long seed;             /* default 1 */
    /* comma-separated lists; defaults "bow" and "mnb,dmnb,gnb,svm" */
    const char* feature_sets;
    const char* classifiers;
    /* classify: "a-to-b" | "cv-a" | "b-to-a" | "cv-b" (default "cv-a") */
    const char* scheme;
} corpuscope_options;

void corpuscope_options_init(corpuscope_options* options);

/* Report builders. b is optional (NULL) where noted; the report text is
 * returned through out. */

/* Data-set and corpus statistics (Tables 1-2 shape). b may be NULL. */
corpuscope_status corpuscope_report_stats(const corpuscope_corpus* a, const corpuscope_corpus* b,
                                          const corpuscope_options* options, char** out);

/* Lexical richness profile (Table 3 shape). b may be NULL. */
corpuscope_status corpuscope_report_profile(const corpuscope_corpus* a, const corpuscope_corpus* b,
                                            const corpuscope_options* options, char** out);

/* Profile diff, five-measure t-test, divergences, author overlap. */
corpuscope_status corpuscope_report_compare(const corpuscope_corpus* a, const corpuscope_corpus* b,
                                            const corpuscope_options* options, char** out);

/* Post lengths sorted descending (Figure 1 series). */
corpuscope_status corpuscope_report_zipf(const corpuscope_corpus* a,
                                         const corpuscope_options* options, char** out);

/* Majority baselines under the four evaluation schemes (Table 4 shape). */
corpuscope_status corpuscope_report_baseline(const corpuscope_corpus* a,
                                             const corpuscope_corpus* b,
                                             const corpuscope_options* options, char** out);

/* One evaluation scheme with one feature set and classifier. b is required
 * for the a-to-b, b-to-a and cv-b schemes. */
corpuscope_status corpuscope_report_classify(const corpuscope_corpus* a,
                                             const corpuscope_corpus* b,
                                             const corpuscope_options* options, char** out);

/* Full 2x2 protocol with majority baselines and the significance battery. */
corpuscope_status corpuscope_report_protocol(const corpuscope_corpus* a,
                                             const corpuscope_corpus* b,
                                             const corpuscope_options* options, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CORPUSCOPE_H */
