#pragma once

// Transcribed board fragments used by the switch constructors and the
// pivoting machinery. Each tile carries a checksum and its expected
// canonical value; a self-test re-evaluates the tile on first use.

namespace hexcgt::detail {

inline constexpr char kSuperswitchTile[] = R"TILE(hex 13 7
###BBBBBBBBBB
##WWWWWWWWWB#
#WBBBB.B.WB##
WB.W.B...B###
W....WBWWW###
BBW.BBBBBB###
WWWWWWWWWW###
kind generic3
terminal 1 13,1
terminal 2 10,6
terminal 3 1,6
)TILE";
inline constexpr unsigned long long kSuperswitchTile_checksum = 0xe710579d8c67ea86ULL;
inline constexpr char kSuperswitchTile_value[] = "{a,b|a}";

inline constexpr char kDualSuperswitchTile[] = R"TILE(hex 13 7
###WWWWWWWWWW
##BBBBBBBBBW#
#BWWWW.W.BW##
BW.B.W...W###
B....BWBBB###
WWB.WWWWWW###
BBBBBBBBBB###
kind generic3
terminal 1 1,7
terminal 2 3,2
terminal 3 10,5
)TILE";
inline constexpr unsigned long long kDualSuperswitchTile_checksum = 0xe2579d4313f6891cULL;
inline constexpr char kDualSuperswitchTile_value[] = "{a|a,b}";

inline constexpr char kSimpleswitchTile[] = R"TILE(hex 8 7
####BBBB
###WWBW#
##W..W##
#WB.W###
B..B####
BB.B####
WWWW####
kind generic3
terminal 1 8,1
terminal 2 4,5
terminal 3 1,5
)TILE";
inline constexpr unsigned long long kSimpleswitchTile_checksum = 0x4957bb3922682586ULL;
inline constexpr char kSimpleswitchTile_value[] = "{a,{top|b}|a}";

inline constexpr char kPivotContextTile[] = R"TILE(hex 9 9
######WBW
#####WB.W
####W..BW
###WBB..W
##WB.W.BW
#W..BWWBW
#WB....W#
WBWBB.BW#
WBWWWBW##
kind generic3
terminal 1 6,9
terminal 2 2,9
terminal 3 8,1
)TILE";
inline constexpr unsigned long long kPivotContextTile_checksum = 0x7c8db375db052076ULL;
inline constexpr char kPivotContextTile_value[] = "{a,b|{a,b|{a|bot}}}";

}  // namespace hexcgt::detail
