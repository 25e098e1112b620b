#pragma once

// The first 32 primary positions of the 3-terminal database, with both
// black and white terminal labels (white labels drive dualization).

namespace hexcgt::detail {

inline constexpr char kBuiltinPrimaries[] = R"PRIM(
primary 1
hex 3 3
#WW
B.B
WW#
blabel 1 1,2
wlabel 1 1,3
wlabel 2 3,1
blabel 2 3,2

primary 2
hex 3 3
#WB
B.W
WB#
blabel 1 1,2
wlabel 2 1,3
wlabel 3 2,1
blabel 3 2,3
blabel 2 3,1
wlabel 1 3,2

primary 3
hex 4 3
#WBW
B..W
WBW#
blabel 1 1,2
wlabel 2 1,3
wlabel 3 2,1
blabel 3 2,3
blabel 2 3,1
wlabel 1 4,2

primary 4
hex 4 3
#WBW
W..W
BWB#
blabel 1 1,3
wlabel 3 2,1
wlabel 2 2,3
blabel 2 3,1
blabel 3 3,3
wlabel 1 4,1

primary 5
hex 4 4
##WB
#W.W
B..W
WBW#
blabel 1 1,3
wlabel 2 1,4
wlabel 3 2,2
blabel 3 2,4
blabel 2 4,1
wlabel 1 4,2

primary 6
hex 4 4
##WW
#B.B
W..W
WBW#
wlabel 2 1,3
blabel 1 2,2
blabel 3 2,4
wlabel 1 3,4
wlabel 3 4,1
blabel 2 4,2

primary 7
hex 4 4
#WW#
W.BW
B..W
WBW#
blabel 1 1,3
wlabel 2 1,4
wlabel 3 2,1
blabel 3 2,4
blabel 2 3,2
wlabel 1 4,3

primary 8
hex 4 4
#WWB
B..W
W..W
WBW#
blabel 1 1,2
wlabel 2 1,3
blabel 3 2,4
wlabel 3 3,1
blabel 2 4,1
wlabel 1 4,2

primary 9
hex 4 4
#WWB
W..W
B..W
WBW#
blabel 1 1,3
wlabel 2 1,4
blabel 3 2,4
wlabel 3 3,1
blabel 2 4,1
wlabel 1 4,2

primary 10
hex 5 4
##WW#
#W.BW
W...W
BWBW#
blabel 1 1,4
wlabel 3 2,2
wlabel 2 2,4
blabel 3 3,4
blabel 2 4,2
wlabel 1 5,3

primary 11
hex 5 4
##WBW
#B..B
W.B.W
WWWW#
blabel 1 2,2
wlabel 3 3,1
blabel 2 4,1
wlabel 2 4,4
wlabel 1 5,1
blabel 3 5,2

primary 12
hex 5 4
##WBW
#W..W
B...W
WWBW#
blabel 1 1,3
wlabel 3 2,2
wlabel 2 2,4
blabel 3 3,4
blabel 2 4,1
wlabel 1 5,2

primary 13
hex 5 4
##WBW
#B..W
W...W
WWBW#
blabel 1 2,2
wlabel 2 2,4
wlabel 3 3,1
blabel 3 3,4
blabel 2 4,1
wlabel 1 5,2

primary 14
hex 5 4
##WBW
#B..B
W...W
WWWW#
blabel 1 2,2
wlabel 3 3,1
wlabel 2 3,4
blabel 2 4,1
wlabel 1 5,1
blabel 3 5,2

primary 15
hex 5 5
##WW#
#B.WB
#W..W
W.W.W
WBBW#
blabel 1 2,2
wlabel 2 2,3
blabel 3 2,5
wlabel 3 4,2
blabel 2 5,2
wlabel 1 5,3

primary 16
hex 5 5
##WWW
#WB.B
B...W
W.BW#
BWW##
blabel 1 1,3
wlabel 2 1,4
blabel 3 1,5
wlabel 3 3,1
wlabel 1 3,5
blabel 2 5,2

primary 17
hex 5 5
###WW
##W.B
#B..W
W...W
WWBW#
blabel 1 2,3
wlabel 2 2,5
wlabel 3 3,2
blabel 3 3,5
blabel 2 5,2
wlabel 1 5,3

primary 18
hex 5 5
##WW#
#W.BW
B...W
W..W#
WBW##
blabel 1 1,3
wlabel 2 1,4
wlabel 3 2,2
blabel 3 2,5
blabel 2 4,2
wlabel 1 4,4

primary 19
hex 5 5
##WW#
#W.BW
W...W
B..W#
WBW##
blabel 1 1,4
wlabel 2 1,5
wlabel 3 2,2
blabel 3 2,5
blabel 2 4,2
wlabel 1 4,4

primary 20
hex 5 5
##BWW
#W..W
W..BW
B..W#
WWB##
blabel 1 1,4
wlabel 3 2,2
wlabel 2 2,5
blabel 2 3,1
blabel 3 3,5
wlabel 1 5,2

primary 21
hex 5 5
##WWW
#W..B
B..WB
W..B#
BWW##
blabel 1 1,3
wlabel 2 1,4
blabel 3 1,5
wlabel 1 2,5
wlabel 3 3,1
blabel 2 5,3

primary 22
hex 5 5
###WW
#WW.B
W..WB
B...W
WBWW#
blabel 1 1,4
wlabel 2 1,5
blabel 3 2,5
wlabel 3 3,2
wlabel 1 3,5
blabel 2 5,2

primary 23
hex 5 5
##BWW
#W.BW
W..BW
B...W
WWBW#
blabel 1 1,4
wlabel 3 2,2
wlabel 2 2,5
blabel 2 3,1
blabel 3 3,5
wlabel 1 5,3

primary 24
hex 5 5
##WWW
#WB.B
B..WB
W...W
WBWW#
blabel 1 1,3
wlabel 2 1,4
blabel 3 2,5
wlabel 1 3,5
wlabel 3 4,1
blabel 2 5,3

primary 25
hex 6 5
##BW##
#W.WBW
#W...W
W.W.B#
WBBB##
wlabel 3 1,4
blabel 2 3,1
wlabel 1 4,1
blabel 1 4,5
blabel 3 5,2
wlabel 2 6,3

primary 26
hex 5 5
##WWW
#W..B
B...W
W..W#
WBW##
blabel 1 1,3
wlabel 2 1,4
blabel 3 2,5
wlabel 3 3,1
wlabel 1 4,4
blabel 2 5,2

primary 27
hex 5 5
##WW#
#W.BW
W...W
B...W
WWBW#
blabel 1 1,4
wlabel 3 2,2
wlabel 2 2,5
blabel 3 3,5
blabel 2 4,2
wlabel 1 5,3

primary 28
hex 5 5
###WW
#WW.B
W...W
B...W
WWBW#
blabel 1 1,4
wlabel 2 2,5
wlabel 3 3,2
blabel 3 3,5
blabel 2 5,2
wlabel 1 5,3

primary 29
hex 5 5
###WW
#WW.B
W...W
B...B
WWWW#
blabel 1 1,4
wlabel 2 2,5
wlabel 3 3,2
blabel 2 5,2
wlabel 1 5,3
blabel 3 5,4

primary 30
hex 5 5
###WW
#WB.W
W...W
W...W
BWBW#
wlabel 3 1,4
blabel 1 1,5
wlabel 2 2,5
blabel 2 3,2
blabel 3 3,5
wlabel 1 5,2

primary 31
hex 5 5
##WWW
#W..B
B..WB
W...W
WBWW#
blabel 1 1,3
wlabel 2 1,4
blabel 3 2,5
wlabel 3 3,1
wlabel 1 3,5
blabel 2 5,3

primary 32
hex 5 5
##BWW
#W..W
W..BW
B...W
WWBW#
blabel 1 1,4
wlabel 3 2,2
wlabel 2 2,5
blabel 2 3,1
blabel 3 3,5
wlabel 1 5,3
)PRIM";

}  // namespace hexcgt::detail
