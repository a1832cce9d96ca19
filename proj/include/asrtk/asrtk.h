/* asrtk/asrtk.h

   Copyright 2026  The asrtk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

   THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
   KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
   WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
   MERCHANTABLITY OR NON-INFRINGEMENT.
   See the Apache 2 License for the specific language governing permissions and
   limitations under the License. */

/* Public C interface of the asrtk shared library.

   asrtk is a toolkit for the non-neural parts of a multilingual low-resource
   ASR stack: audio curation (standardization, VAD, blind SNR filtering,
   chunking), temperature-based corpus sampling, Indic script unification,
   pruned Kneser-Ney n-gram language models (ARPA), lexicon-constrained CTC
   beam-search decoding with LM fusion, n-best rescoring with external LM
   scores, hyperparameter grid tuning, WER/CER scoring, and analysis of
   quantizer/attention dumps.

   Conventions:
     - Every fallible function returns asrtk_status; ASRTK_OK is 0.
     - On failure, asrtk_last_error() returns a thread-local message.
     - Objects are opaque handles created by *_new/_load/_build functions and
       released with the matching *_free. Passing NULL handles is an error.
     - Strings are UTF-8. Token lists are passed as single space-separated
       strings. Returned char* buffers are owned by the caller and released
       with asrtk_string_free; returned numeric buffers with asrtk_buffer_free.
     - Acoustic and fused scores are natural-log; ARPA files store log10. */

#ifndef ASRTK_ASRTK_H_
#define ASRTK_ASRTK_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ASRTK_API __attribute__((visibility("default")))

typedef enum asrtk_status {
  ASRTK_OK = 0,
  ASRTK_E_INVALID_ARG = 1,
  ASRTK_E_IO = 2,
  ASRTK_E_PARSE = 3,           /* malformed manifest/ARPA/TSV/dump input */
  ASRTK_E_UNSUPPORTED_RATE = 4,
  ASRTK_E_EMPTY_AUDIO = 5,
  ASRTK_E_TOO_SHORT = 6,
  ASRTK_E_EMPTY_CORPUS = 7,
  ASRTK_E_LANGUAGE_EXHAUSTED = 8,
  ASRTK_E_UNSUPPORTED_SCRIPT = 9,
  ASRTK_E_UNMAPPABLE = 10,
  ASRTK_E_EMPTY_LEXICON = 11,
  ASRTK_E_INFEASIBLE = 12,     /* CTC target longer than the frame budget */
  ASRTK_E_VOCAB_MISMATCH = 13,
  ASRTK_E_EMPTY_BEAM = 14,
  ASRTK_E_MISSING_REFERENCE = 15,
  ASRTK_E_MISSING_SCORE = 16,
  ASRTK_E_EMPTY_REFERENCE = 17,
  ASRTK_E_UNASSIGNED_FRAME = 18,
  ASRTK_E_INTERNAL = 19
} asrtk_status;

ASRTK_API const char *asrtk_status_name(asrtk_status st);
ASRTK_API const char *asrtk_last_error(void);
ASRTK_API const char *asrtk_version(void);

ASRTK_API void asrtk_string_free(char *s);
ASRTK_API void asrtk_buffer_free(void *p);

/* ---------------------------------------------------------------- audio */

typedef struct asrtk_audio asrtk_audio;

/* `samples` is interleaved float in [-1, 1], `frames` samples per channel. */
ASRTK_API asrtk_status asrtk_audio_from_samples(const float *samples,
                                                int64_t frames, int sample_rate,
                                                int channels,
                                                const char *source_id,
                                                const char *language,
                                                asrtk_audio **out);
ASRTK_API asrtk_status asrtk_audio_load_wav(const char *path, asrtk_audio **out);
ASRTK_API asrtk_status asrtk_audio_save_wav(const asrtk_audio *a,
                                            const char *path);
ASRTK_API int64_t asrtk_audio_frames(const asrtk_audio *a);
ASRTK_API int asrtk_audio_sample_rate(const asrtk_audio *a);
ASRTK_API int asrtk_audio_channels(const asrtk_audio *a);
ASRTK_API double asrtk_audio_duration_s(const asrtk_audio *a);
/* Copies up to `capacity` interleaved samples into `dst`; returns the count. */
ASRTK_API int64_t asrtk_audio_copy_samples(const asrtk_audio *a, float *dst,
                                           int64_t capacity);
/* Mono 16 kHz conversion; identity (bit-exact) when already mono 16 kHz. */
ASRTK_API asrtk_status asrtk_audio_standardize(const asrtk_audio *in,
                                               asrtk_audio **out);
ASRTK_API asrtk_status asrtk_audio_slice(const asrtk_audio *in, double start_s,
                                         double end_s, asrtk_audio **out);
ASRTK_API void asrtk_audio_free(asrtk_audio *a);

typedef struct asrtk_vad_config {
  int frame_ms;        /* 10, 20 or 30 */
  int aggressiveness;  /* 0 (lenient) .. 3 (strict) */
  int hangover_frames; /* speech gaps of at most this many frames are bridged */
} asrtk_vad_config;

/* Emits [start_s, end_s] pairs, flattened; free with asrtk_buffer_free. */
ASRTK_API asrtk_status asrtk_detect_speech(const asrtk_audio *a,
                                           const asrtk_vad_config *cfg,
                                           double **segments,
                                           int64_t *n_segments);

/* Blind SNR estimate in dB, clamped to [-20, 100]. Needs >= 0.1 s of audio. */
ASRTK_API asrtk_status asrtk_wada_snr(const asrtk_audio *a, double *snr_db);

/* Chunk boundary planning: cuts at the latest silence midpoint within
   `search_window_s` before each max-duration limit, hard cut otherwise.
   Emits chunk [start_s, end_s] pairs, flattened. */
ASRTK_API asrtk_status asrtk_plan_chunks(double duration_s,
                                         const double *silence_midpoints,
                                         int64_t n_midpoints,
                                         double max_chunk_s,
                                         double search_window_s,
                                         double **bounds, int64_t *n_chunks);

/* ------------------------------------------------------------- manifest */

typedef struct asrtk_manifest asrtk_manifest;

typedef struct asrtk_manifest_entry {
  const char *path;     /* valid until the manifest is freed or mutated */
  const char *language;
  double duration_s;
  double snr_db;
  double speech_ratio;
} asrtk_manifest_entry;

ASRTK_API asrtk_status asrtk_manifest_new(asrtk_manifest **out);
ASRTK_API asrtk_status asrtk_manifest_load(const char *path,
                                           asrtk_manifest **out);
ASRTK_API asrtk_status asrtk_manifest_save(const asrtk_manifest *m,
                                           const char *path);
ASRTK_API asrtk_status asrtk_manifest_add(asrtk_manifest *m, const char *path,
                                          const char *language,
                                          double duration_s, double snr_db,
                                          double speech_ratio);
ASRTK_API int64_t asrtk_manifest_size(const asrtk_manifest *m);
ASRTK_API asrtk_status asrtk_manifest_entry_get(const asrtk_manifest *m,
                                                int64_t index,
                                                asrtk_manifest_entry *out);
ASRTK_API double asrtk_manifest_total_hours(const asrtk_manifest *m);
/* Drops entries below the SNR threshold, then splits entries longer than
   max_chunk_s (hard cuts; chunk entries get a #cNN path suffix). */
ASRTK_API asrtk_status asrtk_manifest_filter_chunk(const asrtk_manifest *in,
                                                   double snr_threshold_db,
                                                   double max_chunk_s,
                                                   asrtk_manifest **out);
ASRTK_API void asrtk_manifest_free(asrtk_manifest *m);

/* Pseudo-label filter: keeps TSV records (audio_ref<TAB>transcript) whose
   transcript has at least min_words whitespace tokens, preserving order. */
ASRTK_API asrtk_status asrtk_filter_pseudo_labels_file(const char *in_tsv,
                                                       const char *out_tsv,
                                                       int min_words,
                                                       int64_t *n_kept,
                                                       int64_t *n_dropped);

/* -------------------------------------------------------------- sampler */

typedef struct asrtk_distribution asrtk_distribution;

/* p_l proportional to (hours_l / total)^alpha over languages with hours > 0;
   alpha = 0 is uniform over those languages. */
ASRTK_API asrtk_status asrtk_language_distribution(const asrtk_manifest *m,
                                                   double alpha,
                                                   asrtk_distribution **out);
ASRTK_API int64_t asrtk_distribution_size(const asrtk_distribution *d);
ASRTK_API const char *asrtk_distribution_language(const asrtk_distribution *d,
                                                  int64_t index);
ASRTK_API double asrtk_distribution_prob(const asrtk_distribution *d,
                                         int64_t index);
ASRTK_API void asrtk_distribution_free(asrtk_distribution *d);

/* Draws entries until batch_hours is reached; deterministic under seed. */
ASRTK_API asrtk_status asrtk_sample_batch(const asrtk_manifest *m, double alpha,
                                          double batch_hours, uint64_t seed,
                                          asrtk_manifest **out);

/* ------------------------------------------------------ script unifier */

/* Scripts: devanagari (dev/hi/mr/ne), bengali (bn/as), gurmukhi (pa),
   gujarati (gu), oriya (or/odia), tamil (ta), telugu (te), kannada (kn),
   malayalam (ml). `exceptions_tsv` may be NULL for the builtin table.
   With on_unmappable = 0 unmappable characters fail the call; with 1 they
   are passed through. */
ASRTK_API asrtk_status asrtk_translit(const char *utf8_text,
                                      const char *from_script,
                                      const char *to_script,
                                      const char *exceptions_tsv,
                                      int on_unmappable, char **out);

/* ------------------------------------------------------------- n-gram LM */

typedef struct asrtk_lm asrtk_lm;

/* Interpolated modified Kneser-Ney with per-order count pruning.
   `prune_thresholds` has `order` entries (n-grams with adjusted count
   <= threshold are pruned); NULL means no pruning. */
ASRTK_API asrtk_status asrtk_lm_train_file(const char *text_path, int order,
                                           const int64_t *prune_thresholds,
                                           asrtk_lm **out);
ASRTK_API asrtk_status asrtk_lm_load_arpa(const char *path, asrtk_lm **out);
ASRTK_API asrtk_status asrtk_lm_save_arpa(const asrtk_lm *lm, const char *path);
ASRTK_API int asrtk_lm_order(const asrtk_lm *lm);
ASRTK_API int64_t asrtk_lm_ngram_count(const asrtk_lm *lm, int order);
/* Sentence log10 probability with implicit <s> ... </s> padding. */
ASRTK_API asrtk_status asrtk_lm_score_sentence(const asrtk_lm *lm,
                                               const char *tokens,
                                               double *log10_prob);
ASRTK_API asrtk_status asrtk_lm_perplexity_file(const asrtk_lm *lm,
                                                const char *text_path,
                                                double *perplexity);
ASRTK_API void asrtk_lm_free(asrtk_lm *lm);

/* -------------------------------------------------------------- lexicon */

typedef struct asrtk_lexicon asrtk_lexicon;

/* Builds word -> character-spelling entries, dropping words with characters
   outside the char vocabulary file (one token per line). */
ASRTK_API asrtk_status asrtk_lexicon_build_file(const char *words_path,
                                                const char *char_vocab_path,
                                                asrtk_lexicon **out,
                                                int64_t *n_dropped);
ASRTK_API asrtk_status asrtk_lexicon_load(const char *path,
                                          asrtk_lexicon **out);
ASRTK_API asrtk_status asrtk_lexicon_save(const asrtk_lexicon *lex,
                                          const char *path);
/* Adds the top_k most frequent corpus words (ties broken lexicographically). */
ASRTK_API asrtk_status asrtk_lexicon_augment_file(const asrtk_lexicon *base,
                                                  const char *corpus_path,
                                                  int64_t top_k,
                                                  asrtk_lexicon **out);
ASRTK_API int64_t asrtk_lexicon_size(const asrtk_lexicon *lex);
ASRTK_API asrtk_status asrtk_lexicon_oov_rate_file(const asrtk_lexicon *lex,
                                                   const char *ref_path,
                                                   double *rate);
ASRTK_API void asrtk_lexicon_free(asrtk_lexicon *lex);

/* ------------------------------------------------------------ emissions */

typedef struct asrtk_emissions asrtk_emissions;

/* Binary format: magic "EMIS1", u32 T, u32 C, u32 blank_index,
   f32 frame_duration_s, then T*C little-endian f32 natural-log probs,
   row-major. The vocab file lists one token per line in class order. */
ASRTK_API asrtk_status asrtk_emissions_load(const char *path,
                                            const char *vocab_path,
                                            asrtk_emissions **out);
ASRTK_API asrtk_status asrtk_emissions_create(const float *log_probs, int64_t t,
                                              int64_t c, int64_t blank_index,
                                              float frame_duration_s,
                                              const char *const *vocab,
                                              asrtk_emissions **out);
ASRTK_API asrtk_status asrtk_emissions_save(const asrtk_emissions *e,
                                            const char *path,
                                            const char *vocab_path);
ASRTK_API int64_t asrtk_emissions_frames(const asrtk_emissions *e);
ASRTK_API int64_t asrtk_emissions_classes(const asrtk_emissions *e);
ASRTK_API void asrtk_emissions_free(asrtk_emissions *e);

/* ------------------------------------------------------------------ CTC */

/* Per-frame argmax + CTC collapse; tokens joined with spaces. */
ASRTK_API asrtk_status asrtk_ctc_greedy(const asrtk_emissions *e, char **out);
/* Forward-algorithm natural-log likelihood of the target token sequence. */
ASRTK_API asrtk_status asrtk_ctc_loglik(const asrtk_emissions *e,
                                        const char *target_tokens,
                                        double *loglik);
/* Viterbi alignment; emits T class indices; free with asrtk_buffer_free. */
ASRTK_API asrtk_status asrtk_ctc_force_align(const asrtk_emissions *e,
                                             const char *target_tokens,
                                             int32_t **frame_labels,
                                             int64_t *n_frames,
                                             double *path_loglik);

/* -------------------------------------------------------------- decoder */

typedef struct asrtk_decode_config {
  double alpha;   /* LM weight */
  double beta;    /* word insertion bonus */
  int beam_size;  /* >= 1 */
  int n_best;     /* <= beam_size */
} asrtk_decode_config;

typedef struct asrtk_nbest asrtk_nbest;

ASRTK_API asrtk_status asrtk_decode(const asrtk_emissions *e,
                                    const asrtk_lexicon *lex,
                                    const asrtk_lm *lm,
                                    const asrtk_decode_config *cfg,
                                    asrtk_nbest **out);
ASRTK_API int64_t asrtk_nbest_size(const asrtk_nbest *nb);
/* text is space-joined words, owned by the nbest handle. */
ASRTK_API asrtk_status asrtk_nbest_entry(const asrtk_nbest *nb, int64_t rank,
                                         double *am_score, double *lm_score,
                                         int64_t *word_count,
                                         const char **text);
ASRTK_API void asrtk_nbest_free(asrtk_nbest *nb);

/* Decodes every <utt>.emis under emissions_dir (vocab.txt alongside) and
   writes utt<TAB>rank<TAB>am<TAB>lm<TAB>word_count<TAB>text rows. */
ASRTK_API asrtk_status asrtk_decode_dir(const char *emissions_dir,
                                        const asrtk_lexicon *lex,
                                        const asrtk_lm *lm,
                                        const asrtk_decode_config *cfg,
                                        const char *out_tsv, int jobs);

/* -------------------------------------------------------- tune / rescore */

typedef struct asrtk_grid_spec {
  double alpha_lo, alpha_hi, alpha_step;
  double beta_lo, beta_hi, beta_step;
  int tune_beam;
} asrtk_grid_spec;

typedef struct asrtk_tune_result {
  double best_alpha, best_beta, best_wer;
  int64_t grid_points;      /* grid evaluations performed */
  int64_t utterance_decodes;
} asrtk_tune_result;

/* Exhaustive grid search minimizing corpus WER on the validation set;
   ties prefer smaller |alpha|, then smaller beta. surface_tsv may be NULL. */
ASRTK_API asrtk_status asrtk_tune(const char *emissions_dir,
                                  const char *refs_tsv,
                                  const asrtk_lexicon *lex, const asrtk_lm *lm,
                                  const asrtk_grid_spec *grid,
                                  const char *surface_tsv, int jobs,
                                  asrtk_tune_result *out);

/* Picks per utterance the n-best entry maximizing
   am + a1*lm + a2*elm + b*word_count; writes utt<TAB>text rows. */
ASRTK_API asrtk_status asrtk_rescore(const char *nbest_tsv, const char *elm_tsv,
                                     double alpha1, double alpha2, double beta,
                                     const char *out_tsv);

typedef struct asrtk_rescore_grid {
  double a1_lo, a1_hi, a1_step;
  double a2_lo, a2_hi, a2_step;
  double b_lo, b_hi, b_step;
} asrtk_rescore_grid;

ASRTK_API asrtk_status asrtk_tune_rescore_weights(const char *nbest_tsv,
                                                  const char *elm_tsv,
                                                  const char *refs_tsv,
                                                  const asrtk_rescore_grid *g,
                                                  double *best_a1,
                                                  double *best_a2,
                                                  double *best_b,
                                                  double *best_wer);

/* -------------------------------------------------------------- metrics */

/* Tokens are whitespace-separated; text is NFC-normalized first. */
ASRTK_API asrtk_status asrtk_wer_pair(const char *ref_tokens,
                                      const char *hyp_tokens, double *rate,
                                      int64_t *substitutions,
                                      int64_t *insertions, int64_t *deletions,
                                      int64_t *ref_token_count);
ASRTK_API asrtk_status asrtk_cer_pair(const char *ref, const char *hyp,
                                      double *rate);
/* refs/hyps: utt<TAB>text; hyps may also be decoder n-best TSV (rank 0 used).
   per_utt_tsv may be NULL. cer != 0 scores characters instead of words. */
ASRTK_API asrtk_status asrtk_wer_files(const char *refs_tsv,
                                       const char *hyps_tsv, int cer,
                                       double *corpus_rate,
                                       const char *per_utt_tsv);

/* ------------------------------------------------------------- analysis */

/* Dump formats (all little-endian):
     codebook:  magic "CODE1", u32 T, then T x 2 u16 group indices
     frames:    magic "FRAM1", u32 T, u32 d, then T*d f32 row-major
     attention: magic "ATTN1", u32 T, then T*T f32 row-major weights,
                then T u32 frame->span ids
   Input directories group dumps as <dir>/<language>/<utt>.<ext> for codebook
   and frame dumps, and <dir>/<head>.attn for attention dumps. */

/* code_space: 0 = combined g1*320+g2, 1 = group 1 only, 2 = group 2 only. */
ASRTK_API asrtk_status asrtk_analyze_codebook(const char *in_dir,
                                              const char *out_tsv,
                                              const char *ref_language,
                                              int code_space,
                                              double frame_duration_s);
ASRTK_API asrtk_status asrtk_analyze_centroids(const char *in_dir,
                                               const char *out_tsv);
/* silence_spans: comma-separated span ids treated as silence; may be NULL. */
ASRTK_API asrtk_status asrtk_analyze_attention(const char *in_dir,
                                               const char *out_tsv,
                                               const char *silence_spans);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ASRTK_ASRTK_H_ */
