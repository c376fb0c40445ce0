

   class    Spacey   {


      int     x    =    1   ;

      void   m  (  int   a  ,   int b  )   {
          x   =   a   +   b   ;
      }
   }


