#include <algorithm>
#include <unordered_map>

#include "campaign/features.hpp"
#include "campaign/graph.hpp"

namespace campaign {
namespace {

// Per-trend integer view of the entities the network family needs.
struct InternedTweet {
  std::uint32_t sender = 0;
  std::int64_t originator = -1;
  std::vector<std::uint32_t> mentions;
  std::vector<std::uint32_t> tags;  // distinct, in string order
};

class Interner {
 public:
  std::uint32_t operator()(const std::string& key) {
    auto [it, inserted] = ids_.try_emplace(key, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
};

std::vector<InternedTweet> intern_entities(std::span<const TweetRecord> tweets) {
  Interner users, tags;
  std::vector<InternedTweet> out(tweets.size());
  std::vector<std::string> sorted;
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    const auto& t = tweets[i];
    auto& it = out[i];
    it.sender = users(t.sender.user_id);
    if (t.is_retweet && t.originator) it.originator = users(t.originator->user_id);
    for (const auto& m : t.mentions) it.mentions.push_back(users(m));
    sorted = t.hashtags;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& h : sorted) it.tags.push_back(tags(h));
  }
  return out;
}

std::vector<double> network_family_interned(std::span<const InternedTweet* const> tweets) {
  GraphBuilder<std::uint32_t> retweet(NetworkKind::retweet), mention(NetworkKind::mention),
      cooccur(NetworkKind::hashtag);
  for (const auto* t : tweets) {
    if (t->originator >= 0) retweet.add(static_cast<std::uint32_t>(t->originator), t->sender);
    for (auto m : t->mentions) mention.add(t->sender, m);
    for (std::size_t i = 0; i < t->tags.size(); ++i) {
      for (std::size_t j = i + 1; j < t->tags.size(); ++j) cooccur.add(t->tags[i], t->tags[j]);
    }
  }
  std::vector<double> out;
  out.reserve(kNetworkFeatureCount);
  for (auto* b : {&retweet, &mention, &cooccur}) {
    auto f = network_features(b->build());
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

bool contiguous(std::span<const std::size_t> idx) {
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (idx[k] != idx[k - 1] + 1) return false;
  }
  return true;
}

}  // namespace

FeatureMatrix extract_matrix(std::span<const TweetRecord> tweets, std::span<const WindowSlice> windows,
                             const Lexicons& lexicons) {
  FeatureMatrix matrix(kFeatureCount, windows.size());
  for (const auto& w : windows) {
    for (auto i : w.tweet_indices) {
      if (i >= tweets.size()) throw InvalidArgument("window references a tweet out of range");
    }
  }
  if (tweets.empty()) return matrix;  // every window empty -> all zeros

  const auto n_tweets = static_cast<std::ptrdiff_t>(tweets.size());
  std::vector<TweetProfile> profiles(tweets.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n_tweets; ++i) {
    profiles[static_cast<std::size_t>(i)] = profile_tweet(tweets[static_cast<std::size_t>(i)], lexicons);
  }
  const std::vector<InternedTweet> interned = intern_entities(tweets);

  const auto n_windows = static_cast<std::ptrdiff_t>(windows.size());
#pragma omp parallel
  {
    std::vector<const TweetProfile*> prof_ptrs;
    std::vector<const InternedTweet*> ent_ptrs;
    std::vector<TweetRecord> gathered;
    std::vector<double> column;
    column.reserve(kFeatureCount);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t w = 0; w < n_windows; ++w) {
      const auto& idx = windows[static_cast<std::size_t>(w)].tweet_indices;
      prof_ptrs.clear();
      ent_ptrs.clear();
      for (auto i : idx) {
        prof_ptrs.push_back(&profiles[i]);
        ent_ptrs.push_back(&interned[i]);
      }
      std::span<const TweetRecord> records;
      if (idx.empty()) {
        records = {};
      } else if (contiguous(idx)) {
        records = tweets.subspan(idx.front(), idx.size());
      } else {
        gathered.clear();
        for (auto i : idx) gathered.push_back(tweets[i]);
        records = gathered;
      }

      column.clear();
      auto append = [&](const std::vector<double>& part) { column.insert(column.end(), part.begin(), part.end()); };
      append(network_family_interned(ent_ptrs));
      append(user_features(records));
      append(timing_features(records));
      append(content_from_profiles(prof_ptrs));
      append(sentiment_from_profiles(prof_ptrs));
      matrix.set_column(static_cast<std::size_t>(w), column);
    }
  }
  return matrix;
}

}  // namespace campaign
