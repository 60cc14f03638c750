#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pcube {

enum class errc {
  // data / input errors (CLI exit code 2)
  malformed_line,
  empty_cloud,
  duplicate_id,
  out_of_range,
  zero_vector,
  shape_mismatch,
  empty_input,
  all_keys_masked,
  all_blocks_invalid,
  missing_local_k,
  duplicate_local_k,
  dimension_mismatch,
  empty_text,
  missing_embeddings,
  version_mismatch,
  corrupt_file,
  io_error,
  bad_config,
  // numeric failures (exit code 3)
  non_finite_loss,
  gradcheck_failed,
  // command line (exit code 1)
  usage,
};

class error : public std::runtime_error {
 public:
  error(errc c, std::string msg, long detail = -1)
      : std::runtime_error(std::move(msg)), code_(c), detail_(detail) {}

  errc code() const { return code_; }
  // numeric payload: line number, label index k, training step, ...
  long detail() const { return detail_; }

 private:
  errc code_;
  long detail_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg, long detail = -1) {
  throw error(c, msg, detail);
}

inline int exit_code(errc c) {
  switch (c) {
    case errc::usage:
      return 1;
    case errc::non_finite_loss:
    case errc::gradcheck_failed:
      return 3;
    default:
      return 2;
  }
}

}  // namespace pcube
