#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace actloc {

// Malformed input: files, configs, records violating type constraints.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scoring/embedding/chat endpoint failed or returned garbage.
struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-video metadata. frame_count is derived from (duration, scoring rate)
// at ingest and fixed from then on; interchange files never store frame
// indices, only seconds.
struct VideoMeta {
    std::string video_id;
    double duration_s = 0.0;
    double fps_scored = 1.0;
    int frame_count = 0;
};

// floor(duration * fps), snapped against float fuzz, clamped to >= 1.
int frame_count_for(double duration_s, double fps_scored);

// Builds a validated meta (duration > 0, fps > 0).
VideoMeta make_video_meta(std::string video_id, double duration_s, double fps_scored);

// Timestamp of frame `idx`. Throws InputError outside [0, frame_count).
double frame_to_seconds(int idx, const VideoMeta& meta);

// Inverse of frame_to_seconds up to flooring. Accepts the closed range
// [0, duration]; the end instant maps to the last frame.
int seconds_to_frame(double seconds, const VideoMeta& meta);

struct ActionClass {
    int class_id = -1;
    std::string name;
};

// Closed label space: ids are positions in the declared class list.
class LabelSpace {
public:
    LabelSpace() = default;
    explicit LabelSpace(std::vector<std::string> names);

    int id_of(const std::string& name) const;  // -1 if unknown
    const ActionClass& at(int class_id) const;
    const std::vector<ActionClass>& classes() const { return classes_; }
    int size() const { return static_cast<int>(classes_.size()); }

private:
    std::vector<ActionClass> classes_;
};

// One action class decomposed into a boundary-question pair plus a short
// declarative description.
struct QueryTriple {
    int class_id = -1;
    std::string q_start;
    std::string q_end;
    std::string q_desc;
};

struct GroundTruthAction {
    std::string video_id;
    double start_s = 0.0;
    double end_s = 0.0;
    int class_id = -1;
};

// Raw per-frame columns for one (video, class): boundary confidences in
// [0,1] and cosine actionness in [-1,1]. All arrays have length
// meta.frame_count.
struct ScoreSeries {
    std::string video_id;
    int class_id = -1;
    std::vector<double> start_scores;
    std::vector<double> end_scores;
    std::vector<double> actionness;
};

// Candidate interval on the frame axis with its score decomposition.
struct IntervalProposal {
    std::string video_id;
    int class_id = -1;
    int start_idx = 0;
    int end_idx = 0;
    double phi_conf = 0.0;
    double phi_actionness = 0.0;
    double phi = 0.0;
};

struct Detection {
    std::string video_id;
    int class_id = -1;
    double start_s = 0.0;
    double end_s = 0.0;
    double score = 0.0;
};

void validate_action(const GroundTruthAction& a, const VideoMeta& meta, const LabelSpace& labels);
void validate_series(const ScoreSeries& s, const VideoMeta& meta, const LabelSpace& labels);

}  // namespace actloc
