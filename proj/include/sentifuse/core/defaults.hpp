#pragma once

#include <map>
#include <string>
#include <vector>

namespace sentifuse {

// Builtin polarity lexicon, ~200 surface forms with weights in [-1, 1].
// This is a fixture for the lexicon model and the text-characteristic cue
// counts; it makes the engine usable out of the box and keeps tests
// self-contained. Not a claim of equivalence with any published lexicon.
inline const std::map<std::string, double>& builtin_lexicon() {
    static const std::map<std::string, double> table = {
        // positive
        {"good", 0.7}, {"great", 0.85}, {"excellent", 0.95}, {"amazing", 0.9},
        {"awesome", 0.9}, {"wonderful", 0.9}, {"fantastic", 0.9}, {"best", 0.85},
        {"better", 0.5}, {"love", 0.85}, {"loved", 0.85}, {"loves", 0.85},
        {"like", 0.4}, {"liked", 0.4}, {"likes", 0.4}, {"happy", 0.8},
        {"happiness", 0.8}, {"joy", 0.8}, {"joyful", 0.8}, {"glad", 0.6},
        {"pleased", 0.65}, {"pleasant", 0.6}, {"delight", 0.8}, {"delighted", 0.8},
        {"delightful", 0.8}, {"beautiful", 0.75}, {"lovely", 0.7}, {"perfect", 0.95},
        {"nice", 0.55}, {"enjoy", 0.6}, {"enjoyed", 0.6}, {"enjoyable", 0.65},
        {"fun", 0.6}, {"funny", 0.5}, {"cool", 0.5}, {"brilliant", 0.85},
        {"superb", 0.9}, {"outstanding", 0.9}, {"exceptional", 0.85}, {"impressive", 0.7},
        {"impressed", 0.7}, {"remarkable", 0.7}, {"incredible", 0.8}, {"fabulous", 0.85},
        {"terrific", 0.85}, {"positive", 0.6}, {"win", 0.6}, {"winner", 0.65},
        {"winning", 0.6}, {"won", 0.55}, {"success", 0.7}, {"successful", 0.7},
        {"recommend", 0.6}, {"recommended", 0.6}, {"thanks", 0.5}, {"thank", 0.5},
        {"thankful", 0.65}, {"grateful", 0.7}, {"appreciate", 0.6}, {"appreciated", 0.6},
        {"helpful", 0.6}, {"friendly", 0.6}, {"kind", 0.55}, {"smile", 0.6},
        {"smiling", 0.6}, {"excited", 0.7}, {"exciting", 0.7}, {"excitement", 0.7},
        {"fast", 0.35}, {"easy", 0.4}, {"smooth", 0.45}, {"comfortable", 0.5},
        {"clean", 0.4}, {"fresh", 0.4}, {"satisfied", 0.65}, {"satisfying", 0.65},
        {"favorite", 0.65}, {"favourite", 0.65}, {"worth", 0.45}, {"safe", 0.4},
        {"reliable", 0.55}, {"solid", 0.45}, {"strong", 0.4}, {"improved", 0.5},
        {"improvement", 0.5}, {"bonus", 0.5}, {"gem", 0.6}, {"stellar", 0.8},
        {"charming", 0.65}, {"elegant", 0.6}, {"polite", 0.5}, {"generous", 0.6},
        {"fresher", 0.4}, {"yay", 0.7}, {"wow", 0.5}, {"bravo", 0.7},
        {"congrats", 0.7}, {"congratulations", 0.7}, {"welcome", 0.4}, {"cheers", 0.5},
        // negative
        {"bad", -0.7}, {"terrible", -0.9}, {"awful", -0.9}, {"horrible", -0.9},
        {"horrid", -0.85}, {"worst", -0.95}, {"worse", -0.6}, {"hate", -0.85},
        {"hated", -0.85}, {"hates", -0.85}, {"dislike", -0.55}, {"disliked", -0.55},
        {"sad", -0.7}, {"sadness", -0.7}, {"unhappy", -0.75}, {"angry", -0.8},
        {"anger", -0.75}, {"mad", -0.65}, {"furious", -0.85}, {"annoyed", -0.6},
        {"annoying", -0.65}, {"irritating", -0.65}, {"frustrated", -0.7}, {"frustrating", -0.7},
        {"disappointed", -0.7}, {"disappointing", -0.7}, {"disappointment", -0.7},
        {"poor", -0.6}, {"negative", -0.6}, {"ugly", -0.65}, {"boring", -0.55},
        {"bored", -0.5}, {"dull", -0.5}, {"useless", -0.75}, {"worthless", -0.8},
        {"waste", -0.65}, {"wasted", -0.65}, {"fail", -0.7}, {"failed", -0.7},
        {"failure", -0.75}, {"fails", -0.7}, {"broken", -0.65}, {"break", -0.4},
        {"broke", -0.55}, {"problem", -0.5}, {"problems", -0.5}, {"issue", -0.4},
        {"issues", -0.4}, {"wrong", -0.55}, {"error", -0.5}, {"errors", -0.5},
        {"mistake", -0.5}, {"mistakes", -0.5}, {"difficult", -0.4}, {"hard", -0.3},
        {"pain", -0.6}, {"painful", -0.7}, {"hurt", -0.6}, {"hurts", -0.6},
        {"unfortunately", -0.45}, {"unfortunate", -0.5}, {"regret", -0.6}, {"sorry", -0.35},
        {"upset", -0.65}, {"worried", -0.5}, {"worry", -0.5}, {"worries", -0.5},
        {"fear", -0.55}, {"afraid", -0.5}, {"scared", -0.6}, {"scary", -0.55},
        {"terrified", -0.8}, {"awfully", -0.6}, {"nasty", -0.7}, {"gross", -0.65},
        {"disgusting", -0.8}, {"disgusted", -0.75}, {"sick", -0.5}, {"tired", -0.4},
        {"slow", -0.35}, {"late", -0.4}, {"delayed", -0.5}, {"delay", -0.45},
        {"cancelled", -0.6}, {"canceled", -0.6}, {"cancel", -0.45}, {"lost", -0.5},
        {"lose", -0.45}, {"losing", -0.45}, {"loss", -0.5}, {"crash", -0.6},
        {"crashed", -0.6}, {"bug", -0.45}, {"bugs", -0.45}, {"glitch", -0.45},
        {"noisy", -0.4}, {"dirty", -0.5}, {"rude", -0.65}, {"unacceptable", -0.8},
        {"ridiculous", -0.55}, {"pathetic", -0.75}, {"mess", -0.5}, {"messy", -0.45},
        {"stuck", -0.45}, {"expensive", -0.35}, {"overpriced", -0.55}, {"cheap", -0.3},
        {"scam", -0.8}, {"fraud", -0.8}, {"liar", -0.7}, {"lie", -0.55},
        {"lies", -0.55}, {"cry", -0.5}, {"crying", -0.55}, {"miserable", -0.8},
        {"misery", -0.75}, {"dreadful", -0.85}, {"unreliable", -0.6}, {"damage", -0.5},
        {"damaged", -0.55}, {"ruined", -0.7}, {"ruin", -0.6}, {"complaint", -0.5},
        {"complain", -0.45}, {"ignored", -0.5}, {"ignore", -0.35}, {"stupid", -0.65},
        {"dumb", -0.6}, {"insult", -0.65}, {"insulting", -0.7}, {"offensive", -0.65},
    };
    return table;
}

// Degree modifiers applied to the nearest following lexicon hit.
inline const std::map<std::string, double>& builtin_intensifiers() {
    static const std::map<std::string, double> table = {
        {"very", 1.5},   {"really", 1.3},   {"extremely", 1.8}, {"absolutely", 1.6},
        {"totally", 1.4}, {"incredibly", 1.7}, {"so", 1.2},      {"quite", 1.1},
        {"pretty", 1.1},  {"highly", 1.4},   {"utterly", 1.7},  {"somewhat", 0.7},
        {"slightly", 0.5}, {"barely", 0.4},  {"hardly", 0.4},   {"kinda", 0.8},
        {"fairly", 0.9},
    };
    return table;
}

// "n't" matches as a token suffix (can't, don't, isn't, ...).
inline const std::vector<std::string>& default_negation_cues() {
    static const std::vector<std::string> cues = {"not",    "no",  "never", "neither",
                                                  "nor",    "cannot", "n't", "without"};
    return cues;
}

inline const std::vector<std::string>& default_contrast_connectives() {
    static const std::vector<std::string> cues = {"but", "however", "although", "yet"};
    return cues;
}

struct DefaultPattern {
    const char* matcher;
    double polarity;
    double weight;
};

// Builtin sentiment-bearing patterns: emoticons and a few strong idioms.
inline const std::vector<DefaultPattern>& builtin_patterns() {
    static const std::vector<DefaultPattern> table = {
        {":)", 0.7, 1.0},          {":-)", 0.7, 1.0},      {":D", 0.85, 1.0},
        {":(", -0.7, 1.0},         {":-(", -0.7, 1.0},     {":'(", -0.85, 1.0},
        {";)", 0.5, 0.8},          {":/", -0.4, 0.8},      {":|", -0.1, 0.5},
        {"<3", 0.9, 1.0},          {"</3", -0.9, 1.0},     {"!!!", 0.15, 0.3},
        {"\xF0\x9F\x98\x80", 0.85, 1.0},   // grinning face
        {"\xF0\x9F\x98\x8A", 0.8, 1.0},    // smiling face, smiling eyes
        {"\xF0\x9F\x98\x82", 0.7, 1.0},    // tears of joy
        {"\xE2\x9D\xA4", 0.9, 1.0},        // heart
        {"\xF0\x9F\x91\x8D", 0.7, 1.0},    // thumbs up
        {"\xF0\x9F\x91\x8E", -0.7, 1.0},   // thumbs down
        {"\xF0\x9F\x98\xA1", -0.85, 1.0},  // pouting face
        {"\xF0\x9F\x98\xA2", -0.7, 1.0},   // crying face
        {"\xF0\x9F\x98\xAD", -0.75, 1.0},  // loudly crying
        {"thumbs up", 0.7, 1.0},   {"thumbs down", -0.7, 1.0},
        {"two thumbs up", 0.9, 1.2},
        {"five stars", 0.9, 1.2},  {"one star", -0.8, 1.2},
        {"highly recommend", 0.9, 1.2},
        {"never again", -0.85, 1.2},
        {"waste of money", -0.9, 1.2},
        {"waste of time", -0.85, 1.2},
    };
    return table;
}

}  // namespace sentifuse
