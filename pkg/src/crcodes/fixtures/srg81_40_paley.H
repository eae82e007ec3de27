# q=3  nonzero squares of GF(81) as a [20,4,{12,15}] code; Paley graph SRG(81,40,19,20)
00000000111111111111
00011111001111122222
01101222000011200122
10201012021201202002
